#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "loghankel/caratheodory.hpp"
#include "loghankel/families.hpp"

namespace loghankel {

/// H21 of a family member at fixed real p1, as a function of (p2, p3):
///   H21 = scale * (e0 + e1 p2 + e2 p2^2 + e3 (1 - |p2|^2) p3)
/// up to a unimodular factor.
struct Envelope {
  double scale = 0.0;
  double e0 = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;

  Complex evaluate(Complex p2, Complex p3) const noexcept;
};

/// Throws RangeError unless 0 <= p1 <= 1, or if the family spec is invalid.
Envelope envelope(const FamilySpec& spec, double p1);

/// max over |p3| <= 1 of |H21| at fixed (p1, p2):
///   scale * (|e0 + e1 p2 + e2 p2^2| + e3 (1 - |p2|^2)).
double value_p3_optimal(const Envelope& env, Complex p2) noexcept;

/// Unimodular p3 attaining value_p3_optimal (phase-aligned with the p3-free part).
Complex optimal_p3(const Envelope& env, Complex p2) noexcept;

inline constexpr int kDefaultCoarse = 128;
inline constexpr int kDefaultRefineRounds = 3;
inline constexpr int kShrinkFactor = 8;

struct GridInfo {
  int coarse = kDefaultCoarse;
  int refine_rounds = kDefaultRefineRounds;
  int shrink_factor = kShrinkFactor;
  double final_step_p1 = 0.0;
  double final_step_radius = 0.0;
  double final_step_phase = 0.0;
  std::size_t evaluations = 0;
};

struct SearchReport {
  FamilySpec family;
  double max_abs_h21 = 0.0;
  SchurParams argmax;  // p3 is the optimizing unimodular value
  double bound = 0.0;
  double gap = 0.0;  // bound - max_abs_h21
  GridInfo grid;
};

/// Maximizes value_p3_optimal over p1 in [0, 1] x p2 = r e^{i phi} in the
/// closed disk: a (coarse+1) x (coarse+1) x coarse polar grid, then
/// `refine_rounds` local grids around the incumbent, each with steps 8x finer.
/// Ties keep the smallest p1, then the smallest |p2|, then the smallest phase.
/// The p1 axis is split across `workers` threads (0 = hardware concurrency);
/// the result does not depend on the worker count.
/// Requires coarse >= 64 and refine_rounds >= 2 (RangeError otherwise).
SearchReport global_max(const FamilySpec& spec, int coarse = kDefaultCoarse,
                        int refine_rounds = kDefaultRefineRounds, unsigned workers = 0);

enum class Trend { increasing, decreasing, constant, mixed };

std::string_view to_string(Trend t) noexcept;

struct SweepOptions {
  double beta = 0.0;  // fixed beta for spirallike alpha sweeps
  int coarse = kDefaultCoarse;
  int refine_rounds = kDefaultRefineRounds;
  unsigned workers = 0;
};

struct SweepResult {
  std::vector<SearchReport> reports;
  Trend bound_trend = Trend::constant;
};

/// The family spec for tag with its primary parameter set to `value`
/// (alpha, nu or lambda; beta from the options for spirallike). Validated.
FamilySpec family_with_parameter(FamilyTag tag, double value, double beta = 0.0);

/// One global_max report per parameter value. All values are validated before
/// any search starts; an out-of-range value throws RangeError.
SweepResult sweep(FamilyTag tag, std::span<const double> params, const SweepOptions& options = {});

}  // namespace loghankel
