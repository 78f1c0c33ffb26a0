#include "loghankel/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "loghankel/error.hpp"
#include "loghankel/hankel.hpp"
#include "loghankel/kernels.hpp"

namespace loghankel::cli {

using nlohmann::json;

namespace {

// Extremal membership is sampled on this circle.
constexpr double kMembershipRadius = 0.999;
constexpr int kMembershipSamples = 360;

double tol_or(const RunConfig& config, double fallback) { return config.tol.value_or(fallback); }

json config_json(const RunConfig& config, double tol) {
  json c = json::object();
  if (config.family) {
    c["family"] = std::string(to_string(*config.family));
    switch (*config.family) {
      case FamilyTag::spirallike:
        c["alpha"] = config.alpha;
        c["beta"] = config.beta;
        break;
      case FamilyTag::ozaki:
        c["nu"] = config.nu;
        break;
      case FamilyTag::robertson:
        c["lambda"] = config.lambda;
        break;
    }
  }
  c["tol"] = tol;
  switch (config.command) {
    case Command::verify:
    case Command::sweep:
      c["coarse"] = config.coarse;
      c["refine_rounds"] = config.refine_rounds;
      if (config.command == Command::sweep) c["values"] = config.values;
      break;
    case Command::ymax_certify: {
      c["seed"] = config.seed;
      c["n"] = config.n;
      c["radial"] = kCertifyRadial;
      c["angular"] = kCertifyAngular;
      json inject = json::array();
      for (const auto& in : config.inject) inject.push_back({in.a, in.b, in.c});
      c["inject"] = inject;
      break;
    }
    case Command::extremal:
      break;
    case Command::gamma:
      c["koebe"] = config.koebe;
      if (config.a2) c["a2"] = *config.a2;
      if (config.a3) c["a3"] = *config.a3;
      if (config.a4) c["a4"] = *config.a4;
      break;
  }
  return c;
}

json document(const RunConfig& config, double tol, json results, bool pass, double worst) {
  return json{{"command", std::string(to_string(config.command))},
              {"config", config_json(config, tol)},
              {"results", std::move(results)},
              {"summary", {{"pass", pass}, {"worst_residual", worst}}}};
}

json coeffs_json(const CoeffTriple& a) {
  return {{"a2", to_json(a.a2)}, {"a3", to_json(a.a3)}, {"a4", to_json(a.a4)}};
}

bool gap_ok(double gap, double tol) { return gap >= -kBoundSlack && gap <= tol; }

double parse_real(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed number: " + std::string(text));
  return value;
}

// Coefficient of the imaginary unit: "", "+", "-" mean +-1.
double parse_imag_coefficient(std::string_view text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text);
}

// --- rendering -------------------------------------------------------------

void flatten(const json& value, const std::string& prefix, std::vector<std::pair<std::string, json>>& out) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) flatten(child, prefix.empty() ? key : prefix + "." + key, out);
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], prefix + "." + std::to_string(i), out);
  } else {
    out.emplace_back(prefix, value);
  }
}

std::string csv_cell(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  }
  return v.dump();
}

std::string table_cell(const json& v) {
  if (v.is_number_float()) return fmt::format("{:.12g}", v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render_csv(const json& doc) {
  std::ostringstream os;
  const auto& rows = doc.at("results");
  if (rows.empty()) return {};
  std::vector<std::pair<std::string, json>> header_cells;
  flatten(rows.front(), "", header_cells);
  for (std::size_t i = 0; i < header_cells.size(); ++i) os << (i ? "," : "") << header_cells[i].first;
  os << '\n';
  for (const auto& row : rows) {
    std::vector<std::pair<std::string, json>> cells;
    flatten(row, "", cells);
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i].second);
    os << '\n';
  }
  return os.str();
}

std::string render_table(const json& doc) {
  std::string out = fmt::format("command: {}\n", doc.at("command").get<std::string>());
  std::vector<std::pair<std::string, json>> cfg;
  flatten(doc.at("config"), "", cfg);
  for (const auto& [k, v] : cfg) out += fmt::format("  {:<18} {}\n", k, table_cell(v));

  const auto& rows = doc.at("results");
  const bool many = rows.size() > 20;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    // Large certification runs list only failures and injected inputs.
    if (many && row.value("pass", true) && row.value("source", "") != "injected") continue;
    if (++shown > 50) {
      out += "  ... (further rows omitted; use --format json or csv)\n";
      break;
    }
    out += fmt::format("result {}\n", i);
    std::vector<std::pair<std::string, json>> cells;
    flatten(row, "", cells);
    for (const auto& [k, v] : cells) out += fmt::format("  {:<24} {}\n", k, table_cell(v));
  }
  out += "summary\n";
  std::vector<std::pair<std::string, json>> summary;
  flatten(doc.at("summary"), "", summary);
  for (const auto& [k, v] : summary) out += fmt::format("  {:<24} {}\n", k, table_cell(v));
  return out;
}

// --- argument parsing ------------------------------------------------------

void add_family_options(CLI::App& sub, RunConfig& config, std::string& family) {
  sub.add_option("--family", family, "spirallike | ozaki | robertson");
  sub.add_option("--alpha", config.alpha, "spirallike order alpha in [0, 1)");
  sub.add_option("--beta", config.beta, "spirallike angle beta in (-pi/2, pi/2)");
  sub.add_option("--nu", config.nu, "ozaki parameter nu in (0, 1]");
  sub.add_option("--lambda", config.lambda, "robertson parameter lambda in [1/2, 1]");
}

void add_output_options(CLI::App& sub, RunConfig& config, std::string& format, std::string& simd) {
  sub.add_option("--tol", config.tol, "acceptance tolerance (command-specific default)");
  sub.add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
  sub.add_option("--out", config.out, "output path (default: standard output)");
  sub.add_option("--simd", simd, "kernel variant: auto | scalar | avx2 | neon");
}

void add_grid_options(CLI::App& sub, RunConfig& config) {
  sub.add_option("--coarse", config.coarse, "coarse grid resolution (>= 64)");
  sub.add_option("--refine-rounds", config.refine_rounds, "local refinement rounds (>= 2)");
  sub.add_option("--workers", config.workers, "worker threads for the search (0 = all cores)");
}

std::vector<double> split_values(const std::string& text) {
  std::vector<double> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    out.push_back(parse_real(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::verify:
      return "verify";
    case Command::sweep:
      return "sweep";
    case Command::ymax_certify:
      return "ymax-certify";
    case Command::extremal:
      return "extremal";
    case Command::gamma:
      return "gamma";
  }
  return "unknown";
}

std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::table:
      return "table";
  }
  return "table";
}

FamilySpec family_from_config(const RunConfig& config) {
  if (!config.family) throw RangeError("--family is required for this command");
  FamilySpec spec;
  switch (*config.family) {
    case FamilyTag::spirallike:
      spec = Spirallike{config.alpha, config.beta};
      break;
    case FamilyTag::ozaki:
      spec = Ozaki{config.nu};
      break;
    case FamilyTag::robertson:
      spec = Robertson{config.lambda};
      break;
  }
  validate(spec);
  return spec;
}

void validate_config(const RunConfig& config) {
  if (config.coarse < 64) throw RangeError("--coarse must be >= 64");
  if (config.refine_rounds < 2) throw RangeError("--refine-rounds must be >= 2");
  if (config.tol && !(*config.tol > 0.0)) throw RangeError("--tol must be positive");
  if (config.n < 0) throw RangeError("--n must be non-negative");
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const SearchReport& r) {
  const FamilySpec& spec = r.family;
  json row = {
      {"family", describe(spec)},
      {"max_abs_h21", r.max_abs_h21},
      {"bound", r.bound},
      {"gap", r.gap},
      {"argmax",
       {{"p1", r.argmax.p1},
        {"p2", to_json(r.argmax.p2)},
        {"p2_abs", std::abs(r.argmax.p2)},
        {"p2_phase", std::arg(r.argmax.p2) < 0 ? std::arg(r.argmax.p2) + 2 * std::numbers::pi : std::arg(r.argmax.p2)},
        {"p3", to_json(r.argmax.p3)}}},
      {"grid",
       {{"coarse", r.grid.coarse},
        {"refine_rounds", r.grid.refine_rounds},
        {"shrink_factor", r.grid.shrink_factor},
        {"final_step_p1", r.grid.final_step_p1},
        {"final_step_radius", r.grid.final_step_radius},
        {"final_step_phase", r.grid.final_step_phase},
        {"evaluations", r.grid.evaluations}}},
  };
  if (!std::holds_alternative<Spirallike>(spec)) row["s_critical"] = s_critical(spec);
  return row;
}

CommandOutcome cmd_verify(const RunConfig& config) {
  validate_config(config);
  const FamilySpec spec = family_from_config(config);
  const double tol = tol_or(config, kVerifyTol);
  const SearchReport report = global_max(spec, config.coarse, config.refine_rounds, config.workers);
  json row = to_json(report);
  const bool pass = gap_ok(report.gap, tol);
  row["pass"] = pass;
  return {pass ? kExitPass : kExitFail, document(config, tol, json::array({row}), pass, report.gap)};
}

CommandOutcome cmd_sweep(const RunConfig& config) {
  validate_config(config);
  if (!config.family) throw RangeError("--family is required for sweep");
  if (config.values.empty()) throw RangeError("sweep needs --values");
  const double tol = tol_or(config, kVerifyTol);
  const SweepResult result = sweep(*config.family, config.values,
                                   SweepOptions{config.beta, config.coarse, config.refine_rounds, config.workers});
  json rows = json::array();
  bool pass = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    json row = to_json(result.reports[i]);
    row["parameter"] = config.values[i];
    const bool ok = gap_ok(result.reports[i].gap, tol);
    row["pass"] = ok;
    pass = pass && ok;
    worst = std::max(worst, std::abs(result.reports[i].gap));
    rows.push_back(std::move(row));
  }
  json doc = document(config, tol, std::move(rows), pass, worst);
  doc["summary"]["bound_trend"] = std::string(to_string(result.bound_trend));
  return {pass ? kExitPass : kExitFail, std::move(doc)};
}

CommandOutcome cmd_ymax_certify(const RunConfig& config) {
  validate_config(config);
  const double tol = tol_or(config, kYmaxTol);
  std::vector<std::pair<YInput, const char*>> inputs;
  for (const auto& in : config.inject) inputs.emplace_back(in, "injected");
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> draw(-5.0, 5.0);
  for (int i = 0; i < config.n; ++i) {
    YInput in;
    in.a = draw(rng);
    in.b = draw(rng);
    in.c = draw(rng);
    inputs.emplace_back(in, "random");
  }

  json rows = json::array();
  std::size_t passed = 0;
  double worst = 0.0;
  for (const auto& [in, source] : inputs) {
    const YCertification cert = certify(in, tol);
    passed += cert.pass ? 1 : 0;
    worst = std::max(worst, cert.discrepancy);
    rows.push_back({{"source", source},
                    {"input", {in.a, in.b, in.c}},
                    {"case", std::string(to_string(cert.closed_form.case_label))},
                    {"closed_form", cert.closed_form.value},
                    {"oracle", cert.oracle},
                    {"discrepancy", cert.discrepancy},
                    {"allowance", cert.allowance},
                    {"pass", cert.pass}});
  }
  const bool pass = passed == inputs.size();
  json doc = document(config, tol, std::move(rows), pass, worst);
  doc["summary"]["passed"] = passed;
  doc["summary"]["total"] = inputs.size();
  return {pass ? kExitPass : kExitFail, std::move(doc)};
}

CommandOutcome cmd_extremal(const RunConfig& config) {
  const FamilySpec spec = family_from_config(config);
  if (config.tol && !(*config.tol > 0.0)) throw RangeError("--tol must be positive");
  const double tol = tol_or(config, kExtremalTol);
  const CoeffTriple a = extremal_coeffs(spec);
  const Complex h = h21(a);
  const double bound = sharp_bound(spec);
  const double residual = std::abs(std::abs(h) - bound);
  json row = coeffs_json(a);
  row["family"] = describe(spec);
  row["h21"] = to_json(h);
  row["abs_h21"] = std::abs(h);
  row["bound"] = bound;
  row["residual"] = residual;
  row["membership_margin"] = extremal_membership_margin(spec, kMembershipRadius, kMembershipSamples);
  if (!std::holds_alternative<Spirallike>(spec)) row["s_critical"] = s_critical(spec);
  const bool pass = residual <= tol;
  row["pass"] = pass;
  return {pass ? kExitPass : kExitFail, document(config, tol, json::array({row}), pass, residual)};
}

CommandOutcome cmd_gamma(const RunConfig& config) {
  const double tol = tol_or(config, kGammaPathTol);
  CoeffTriple a;
  std::string source;
  const bool literal = config.a2 || config.a3 || config.a4;
  if (config.koebe + literal + config.family.has_value() != 1)
    throw std::invalid_argument("gamma needs exactly one of --koebe, --a2/--a3/--a4, or --family");
  if (config.koebe) {
    a = {2.0, 3.0, 4.0};
    source = "koebe";
  } else if (literal) {
    a = {parse_complex(config.a2.value_or("0")), parse_complex(config.a3.value_or("0")),
         parse_complex(config.a4.value_or("0"))};
    source = "literal";
  } else {
    const FamilySpec spec = family_from_config(config);
    a = extremal_coeffs(spec);
    source = "extremal " + describe(spec);
  }
  const GammaTriple g = log_coeffs(a);
  const Complex via_gamma = h21(a);
  const Complex via_monomial = h21_monomial(a);
  const double diff = std::abs(via_gamma - via_monomial);
  const bool pass = diff <= tol * std::max(1.0, std::abs(via_monomial));
  json row = coeffs_json(a);
  row["source"] = source;
  row["gamma1"] = to_json(g.g1);
  row["gamma2"] = to_json(g.g2);
  row["gamma3"] = to_json(g.g3);
  row["h21_gamma_path"] = to_json(via_gamma);
  row["h21_monomial_path"] = to_json(via_monomial);
  row["abs_h21"] = std::abs(via_gamma);
  row["path_difference"] = diff;
  row["pass"] = pass;
  return {pass ? kExitPass : kExitFail, document(config, tol, json::array({row}), pass, diff)};
}

CommandOutcome run_command(const RunConfig& config) {
  switch (config.command) {
    case Command::verify:
      return cmd_verify(config);
    case Command::sweep:
      return cmd_sweep(config);
    case Command::ymax_certify:
      return cmd_ymax_certify(config);
    case Command::extremal:
      return cmd_extremal(config);
    case Command::gamma:
      return cmd_gamma(config);
  }
  throw std::logic_error("unhandled command");
}

Complex parse_complex(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') compact += ch;
  std::string_view s = compact;
  if (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']'))) {
    s.remove_prefix(1);
    s.remove_suffix(1);
  }
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  if (const auto comma = s.find(','); comma != std::string_view::npos)
    return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};

  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s), 0.0};

  s.remove_suffix(1);
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag_coefficient(s)};
  return {parse_real(s.substr(0, split)), parse_imag_coefficient(s.substr(split))};
}

std::string render(const json& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return doc.dump(2) + "\n";
    case OutputFormat::csv:
      return render_csv(doc);
    case OutputFormat::table:
      return render_table(doc);
  }
  return {};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic-coefficient Hankel determinant bounds: search, oracles, extremal checks"};
  app.require_subcommand(1);

  RunConfig config;
  std::string family;
  std::string format = "table";
  std::string simd = "auto";
  std::string values;
  std::vector<std::string> inject;

  auto* verify = app.add_subcommand("verify", "search the parameter domain and compare with the sharp bound");
  auto* sweep_cmd = app.add_subcommand("sweep", "verify over a list of family parameters");
  auto* ymax = app.add_subcommand("ymax-certify", "certify the closed-form Y maximum against a grid oracle");
  auto* extremal = app.add_subcommand("extremal", "evaluate H21 of the extremal function");
  auto* gamma = app.add_subcommand("gamma", "logarithmic coefficients and H21 by both formulas");

  for (auto* sub : {verify, sweep_cmd, extremal, gamma}) add_family_options(*sub, config, family);
  for (auto* sub : {verify, sweep_cmd, ymax, extremal, gamma}) add_output_options(*sub, config, format, simd);
  for (auto* sub : {verify, sweep_cmd}) add_grid_options(*sub, config);
  sweep_cmd->add_option("--values", values, "comma-separated parameter values (alpha, nu or lambda)");
  ymax->add_option("--seed", config.seed, "seed of the random draws");
  ymax->add_option("--n", config.n, "number of random (A,B,C) draws from [-5,5]^3");
  ymax->add_option("--inject", inject, "extra triple A,B,C to certify (repeatable)");
  gamma->add_flag("--koebe", config.koebe, "use the Koebe function z/(1-z)^2");
  gamma->add_option("--a2", config.a2, "complex literal, e.g. 1+2i or 1,2");
  gamma->add_option("--a3", config.a3, "complex literal");
  gamma->add_option("--a4", config.a4, "complex literal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) config.command = Command::verify;
    if (sweep_cmd->parsed()) config.command = Command::sweep;
    if (ymax->parsed()) config.command = Command::ymax_certify;
    if (extremal->parsed()) config.command = Command::extremal;
    if (gamma->parsed()) config.command = Command::gamma;

    if (!family.empty()) config.family = parse_family_tag(family);
    config.format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::table;
    if (simd != "auto") kernels::set_simd_level(kernels::parse_simd_level(simd));
    if (!values.empty()) config.values = split_values(values);
    for (const auto& triple : inject) {
      const auto parts = split_values(triple);
      if (parts.size() != 3) throw std::invalid_argument("--inject expects A,B,C");
      config.inject.push_back({parts[0], parts[1], parts[2]});
    }

    const CommandOutcome outcome = run_command(config);
    const std::string text = render(outcome.document, config.format);
    if (config.out) {
      std::ofstream file(*config.out, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << *config.out << " for writing\n";
        return kExitUsage;
      }
      file << text;
    } else {
      out << text;
    }
    return outcome.exit_code;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace loghankel::cli
