#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "loghankel/families.hpp"
#include "loghankel/search.hpp"
#include "loghankel/ymax.hpp"

namespace loghankel::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Default acceptance tolerances per command.
inline constexpr double kVerifyTol = 5e-4;
inline constexpr double kYmaxTol = 1e-6;
inline constexpr double kExtremalTol = 1e-10;
inline constexpr double kGammaPathTol = 1e-12;
// A search may not exceed the proven bound by more than this.
inline constexpr double kBoundSlack = 1e-9;

enum class Command { verify, sweep, ymax_certify, extremal, gamma };
enum class OutputFormat { json, csv, table };

std::string_view to_string(Command c) noexcept;
std::string_view to_string(OutputFormat f) noexcept;

struct RunConfig {
  Command command = Command::verify;
  std::optional<FamilyTag> family;
  double alpha = 0.0;
  double beta = 0.0;
  double nu = 1.0;
  double lambda = 0.5;
  int coarse = kDefaultCoarse;
  int refine_rounds = kDefaultRefineRounds;
  std::optional<double> tol;  // command default when unset
  OutputFormat format = OutputFormat::table;
  std::optional<std::string> out;
  std::uint64_t seed = 1;
  int n = 10000;
  std::vector<double> values;  // sweep parameter grid
  std::vector<YInput> inject;  // extra ymax triples certified before the random draws
  bool koebe = false;          // gamma
  std::optional<std::string> a2, a3, a4;
  unsigned workers = 0;
};

/// Family spec assembled from the config's family tag and parameters.
/// Throws RangeError when no family is set or parameters are out of range.
FamilySpec family_from_config(const RunConfig& config);

/// Validates grid settings and tolerances against their preconditions.
void validate_config(const RunConfig& config);

struct CommandOutcome {
  int exit_code = kExitPass;
  nlohmann::json document;  // {command, config, results[], summary{pass, worst_residual, ...}}
};

CommandOutcome cmd_verify(const RunConfig& config);
CommandOutcome cmd_sweep(const RunConfig& config);
CommandOutcome cmd_ymax_certify(const RunConfig& config);
CommandOutcome cmd_extremal(const RunConfig& config);
CommandOutcome cmd_gamma(const RunConfig& config);
CommandOutcome run_command(const RunConfig& config);

/// Accepts "x", "yi", "x+yi", "x-yi", "i", "-i" (i or j), and "re,im" with
/// optional parentheses or brackets. Throws std::invalid_argument otherwise.
Complex parse_complex(std::string_view text);

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const SearchReport& report);

std::string render(const nlohmann::json& document, OutputFormat format);

/// Full command-line entry point; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loghankel::cli
