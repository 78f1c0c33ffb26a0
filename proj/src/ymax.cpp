#include "loghankel/ymax.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <map>
#include <memory>
#include <utility>

#include "loghankel/error.hpp"
#include "loghankel/kernels.hpp"

namespace loghankel {

namespace {

// Radicand noise floor for the R_SQRT branch.
constexpr double kRadicandFloor = -1e-12;

[[maybe_unused]] void assert_continuous(double lhs, double rhs) {
  assert(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
  (void)lhs;
  (void)rhs;
}

double r_sqrt_value(double a_abs, double c_abs, double a, double b, double c) {
  double radicand = 1.0 - b * b / (4.0 * a * c);
  if (radicand < 0.0) {
    if (radicand < kRadicandFloor) throw std::logic_error("Y maximum: negative radicand in R branch");
    radicand = 0.0;
  }
  return (a_abs + c_abs) * std::sqrt(radicand);
}

YResult r_branch(double a, double b, double c) {
  const double aa = std::abs(a), ab = std::abs(b), ac = std::abs(c);
  const double r_sum = aa + ab - ac;
  const double r_diff = -aa + ab + ac;
  if (ac * (ab + 4.0 * aa) <= std::abs(a * b)) {
#ifndef NDEBUG
    if (ac * (ab + 4.0 * aa) == std::abs(a * b)) assert_continuous(r_sum, r_sqrt_value(aa, ac, a, b, c));
#endif
    return {r_sum, YCase::r_sum};
  }
  if (std::abs(a * b) <= ac * (ab - 4.0 * aa)) {
#ifndef NDEBUG
    if (std::abs(a * b) == ac * (ab - 4.0 * aa)) assert_continuous(r_diff, r_sqrt_value(aa, ac, a, b, c));
#endif
    return {r_diff, YCase::r_diff};
  }
  return {r_sqrt_value(aa, ac, a, b, c), YCase::r_sqrt};
}

// Trig tables cached per grid.
std::shared_ptr<const kernels::RingTable> half_ring_table(int angular) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const kernels::RingTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[angular];
  if (!slot) {
    // Real coefficients: the objective at conj(z) equals the one at z, so
    // theta in [0, pi] covers the grid when angular is even.
    const auto count = static_cast<std::size_t>(angular % 2 == 0 ? angular / 2 + 1 : angular);
    slot = std::make_shared<const kernels::RingTable>(
        kernels::RingTable::uniform(count, static_cast<std::size_t>(angular)));
  }
  return slot;
}

}  // namespace

std::string_view to_string(YCase c) noexcept {
  switch (c) {
    case YCase::ac_nonneg_sum:
      return "AC_NONNEG_SUM";
    case YCase::ac_nonneg_parabola:
      return "AC_NONNEG_PARABOLA";
    case YCase::neg_first:
      return "NEG_FIRST";
    case YCase::neg_second:
      return "NEG_SECOND";
    case YCase::r_sum:
      return "R_SUM";
    case YCase::r_diff:
      return "R_DIFF";
    case YCase::r_sqrt:
      return "R_SQRT";
  }
  return "UNKNOWN";
}

YResult y_closed_form(const YInput& in) {
  const double a = in.a, b = in.b, c = in.c;
  const double aa = std::abs(a), ab = std::abs(b), ac = std::abs(c);

  if (a * c >= 0.0) {
    if (ab >= 2.0 * (1.0 - ac)) {
      const double sum = aa + ab + ac;
#ifndef NDEBUG
      if (ab == 2.0 * (1.0 - ac) && ac < 1.0) assert_continuous(sum, 1.0 + aa + b * b / (4.0 * (1.0 - ac)));
#endif
      return {sum, YCase::ac_nonneg_sum};
    }
    return {1.0 + aa + b * b / (4.0 * (1.0 - ac)), YCase::ac_nonneg_parabola};
  }

  // AC < 0, so C != 0.
  const double threshold = -4.0 * a * c * (1.0 / (c * c) - 1.0);
  if (threshold <= b * b && ab < 2.0 * (1.0 - ac))
    return {1.0 - aa + b * b / (4.0 * (1.0 - ac)), YCase::neg_first};
  if (b * b < std::min(4.0 * (1.0 + ac) * (1.0 + ac), threshold))
    return {1.0 + aa + b * b / (4.0 * (1.0 + ac)), YCase::neg_second};
  return r_branch(a, b, c);
}

double y_oracle(const YInput& in, int radial, int angular) {
  if (radial < 64) throw RangeError("y_oracle: radial must be >= 64");
  if (angular < 256) throw RangeError("y_oracle: angular must be >= 256");
  const auto table = half_ring_table(angular);
  double best = -1.0;
  for (int j = 0; j <= radial; ++j) {
    const double r = static_cast<double>(j) / radial;
    const auto ring = kernels::ring_argmax(in.a, in.b * r, in.c * r * r, *table);
    best = std::max(best, std::sqrt(ring.norm_sq) + 1.0 - r * r);
  }
  return best;
}

double grid_allowance(const YInput& in, int radial, int angular) noexcept {
  const double lipschitz = std::abs(in.b) + 2.0 * std::abs(in.c) + 2.0;
  return lipschitz * (std::numbers::pi / angular + 1.0 / radial);
}

YCertification certify(const YInput& in, double tol, int radial, int angular) {
  if (!(tol > 0.0)) throw RangeError("certify: tol must be positive");
  YCertification out;
  out.closed_form = y_closed_form(in);
  out.oracle = y_oracle(in, radial, angular);
  out.discrepancy = std::abs(out.closed_form.value - out.oracle);
  out.allowance = grid_allowance(in, radial, angular);
  out.pass = out.discrepancy <= tol + out.allowance;
  return out;
}

bool y_certify(const YInput& in, double tol) { return certify(in, tol).pass; }

}  // namespace loghankel
