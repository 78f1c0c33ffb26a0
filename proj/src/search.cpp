#include "loghankel/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "loghankel/error.hpp"
#include "loghankel/kernels.hpp"

namespace loghankel {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Incumbent {
  double value = -1.0;
  double p1 = 0.0;
  double radius = 0.0;
  double phase = 0.0;
};

// One search stage: the cartesian product p1s x radii x phases.
struct Stage {
  std::vector<double> p1s;
  std::vector<double> radii;
  kernels::RingTable phases;
};

Incumbent scan_p1_range(const FamilySpec& spec, const Stage& stage, std::size_t first, std::size_t last) {
  Incumbent best;
  for (std::size_t i = first; i < last; ++i) {
    const double p1 = stage.p1s[i];
    const Envelope env = envelope(spec, p1);
    for (const double r : stage.radii) {
      const auto ring = kernels::ring_argmax(env.e0, env.e1 * r, env.e2 * r * r, stage.phases);
      const double v = env.scale * (std::sqrt(ring.norm_sq) + env.e3 * (1.0 - r * r));
      if (v > best.value) best = {v, p1, r, stage.phases.angles()[ring.index]};
    }
  }
  return best;
}

Incumbent scan(const FamilySpec& spec, const Stage& stage, unsigned workers) {
  const std::size_t n = stage.p1s.size();
  const std::size_t parts = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  std::vector<Incumbent> partial(parts);
  auto bounds = [&](std::size_t part) {
    return std::pair{n * part / parts, n * (part + 1) / parts};
  };
  if (parts == 1) {
    partial[0] = scan_p1_range(spec, stage, 0, n);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(parts);
    for (std::size_t part = 0; part < parts; ++part) {
      threads.emplace_back([&, part] {
        const auto [first, last] = bounds(part);
        partial[part] = scan_p1_range(spec, stage, first, last);
      });
    }
  }
  // Ascending partition order, strict comparison: sequential tie-break.
  Incumbent best;
  for (const auto& p : partial)
    if (p.value > best.value) best = p;
  return best;
}

std::vector<double> window(double center, double step, int half_width, bool clamp_unit) {
  std::vector<double> out;
  out.reserve(2 * static_cast<std::size_t>(half_width) + 1);
  for (int m = -half_width; m <= half_width; ++m) {
    const double v = center + m * step;
    if (clamp_unit && (v < 0.0 || v > 1.0)) continue;
    out.push_back(v);
  }
  return out;
}

std::vector<double> uniform_unit(int coarse) {
  std::vector<double> out(static_cast<std::size_t>(coarse) + 1);
  for (int i = 0; i <= coarse; ++i) out[static_cast<std::size_t>(i)] = static_cast<double>(i) / coarse;
  return out;
}

double wrap_phase(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  return phi < 0.0 ? phi + two_pi : phi;
}

}  // namespace

Complex Envelope::evaluate(Complex p2, Complex p3) const noexcept {
  return scale * (e0 + e1 * p2 + e2 * p2 * p2 + e3 * (1.0 - std::norm(p2)) * p3);
}

Envelope envelope(const FamilySpec& spec, double p1) {
  validate(spec);
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw RangeError("envelope: p1 must lie in [0, 1]");
  const double sq = p1 * p1;
  const double q = 1.0 - sq;
  return std::visit(Overloaded{
                        [&](const Spirallike& s) {
                          const double w = (1.0 - s.alpha) * std::cos(s.beta);
                          return Envelope{w * w / 12.0, sq * sq, 2.0 * q * sq, -q * (3.0 + sq), 4.0 * p1 * q};
                        },
                        [&](const Ozaki& o) {
                          const double nu = o.nu;
                          return Envelope{nu * nu / 2304.0, (-nu * nu - 4.0 * nu + 8.0) * sq * sq,
                                          4.0 * (4.0 - nu) * q * sq, -8.0 * (2.0 + sq) * q, 24.0 * p1 * q};
                        },
                        [&](const Robertson& r) {
                          const double l = r.lambda;
                          const double k = 2.0 * l + 1.0;
                          return Envelope{k * k / 2304.0, (-4.0 * l * l + 4.0 * l + 11.0) * sq * sq,
                                          4.0 * (2.0 * l + 5.0) * q * sq, -8.0 * (sq + 2.0) * q, 24.0 * p1 * q};
                        },
                    },
                    spec);
}

double value_p3_optimal(const Envelope& env, Complex p2) noexcept {
  return env.scale * (std::abs(env.e0 + env.e1 * p2 + env.e2 * p2 * p2) + env.e3 * (1.0 - std::norm(p2)));
}

Complex optimal_p3(const Envelope& env, Complex p2) noexcept {
  const Complex base = env.e0 + env.e1 * p2 + env.e2 * p2 * p2;
  const double mag = std::abs(base);
  return mag > 0.0 ? base / mag : Complex{1.0};
}

SearchReport global_max(const FamilySpec& spec, int coarse, int refine_rounds, unsigned workers) {
  validate(spec);
  if (coarse < 64) throw RangeError("global_max: coarse must be >= 64");
  if (refine_rounds < 2) throw RangeError("global_max: refine_rounds must be >= 2");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  GridInfo grid{.coarse = coarse, .refine_rounds = refine_rounds, .shrink_factor = kShrinkFactor};
  double step_unit = 1.0 / coarse;
  double step_phase = 2.0 * std::numbers::pi / coarse;

  Stage stage{uniform_unit(coarse), uniform_unit(coarse),
              kernels::RingTable::uniform(static_cast<std::size_t>(coarse), static_cast<std::size_t>(coarse))};
  Incumbent best = scan(spec, stage, workers);
  grid.evaluations += stage.p1s.size() * stage.radii.size() * stage.phases.size();

  for (int round = 0; round < refine_rounds; ++round) {
    step_unit /= kShrinkFactor;
    step_phase /= kShrinkFactor;
    Stage local{window(best.p1, step_unit, kShrinkFactor, true), window(best.radius, step_unit, kShrinkFactor, true),
                kernels::RingTable(window(best.phase, step_phase, kShrinkFactor, false))};
    const Incumbent candidate = scan(spec, local, workers);
    grid.evaluations += local.p1s.size() * local.radii.size() * local.phases.size();
    // Strict improvement required to move the incumbent.
    if (candidate.value > best.value) best = candidate;
  }
  grid.final_step_p1 = step_unit;
  grid.final_step_radius = step_unit;
  grid.final_step_phase = step_phase;

  const double phase = wrap_phase(best.phase);
  const Complex p2 = std::polar(best.radius, phase);
  const Envelope env = envelope(spec, best.p1);

  SearchReport report;
  report.family = spec;
  report.grid = grid;
  report.max_abs_h21 = value_p3_optimal(env, p2);
  report.argmax = SchurParams{best.p1, p2, optimal_p3(env, p2)};
  report.bound = sharp_bound(spec);
  report.gap = report.bound - report.max_abs_h21;
  return report;
}

std::string_view to_string(Trend t) noexcept {
  switch (t) {
    case Trend::increasing:
      return "increasing";
    case Trend::decreasing:
      return "decreasing";
    case Trend::constant:
      return "constant";
    case Trend::mixed:
      return "mixed";
  }
  return "mixed";
}

FamilySpec family_with_parameter(FamilyTag tag, double value, double beta) {
  FamilySpec spec;
  switch (tag) {
    case FamilyTag::spirallike:
      spec = Spirallike{value, beta};
      break;
    case FamilyTag::ozaki:
      spec = Ozaki{value};
      break;
    case FamilyTag::robertson:
      spec = Robertson{value};
      break;
  }
  validate(spec);
  return spec;
}

SweepResult sweep(FamilyTag tag, std::span<const double> params, const SweepOptions& options) {
  std::vector<FamilySpec> specs;
  specs.reserve(params.size());
  for (const double v : params) specs.push_back(family_with_parameter(tag, v, options.beta));

  SweepResult result;
  for (const auto& spec : specs)
    result.reports.push_back(global_max(spec, options.coarse, options.refine_rounds, options.workers));

  bool up = false, down = false;
  for (std::size_t i = 1; i < result.reports.size(); ++i) {
    const double d = result.reports[i].bound - result.reports[i - 1].bound;
    up = up || d > 0.0;
    down = down || d < 0.0;
  }
  result.bound_trend = up && down ? Trend::mixed : up ? Trend::increasing : down ? Trend::decreasing : Trend::constant;
  return result;
}

}  // namespace loghankel
