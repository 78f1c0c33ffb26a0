#pragma once

#include <string_view>

namespace loghankel {

/// Real coefficients of the quadratic A + Bz + Cz^2.
struct YInput {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Which closed-form branch produced Y(A, B, C).
enum class YCase {
  ac_nonneg_sum,       // AC >= 0, |B| >= 2(1-|C|):  |A|+|B|+|C|
  ac_nonneg_parabola,  // AC >= 0, |B| <  2(1-|C|):  1+|A|+B^2/(4(1-|C|))
  neg_first,           // AC < 0:  1-|A|+B^2/(4(1-|C|))
  neg_second,          // AC < 0:  1+|A|+B^2/(4(1+|C|))
  r_sum,               // R branch: |A|+|B|-|C|
  r_diff,              // R branch: -|A|+|B|+|C|
  r_sqrt,              // R branch: (|A|+|C|) sqrt(1 - B^2/(4AC))
};

std::string_view to_string(YCase c) noexcept;

struct YResult {
  double value = 0.0;
  YCase case_label = YCase::ac_nonneg_parabola;
};

/// Y(A, B, C) = max over the closed unit disk of |A + Bz + Cz^2| + 1 - |z|^2,
/// in closed form. Conditions are tested top to bottom and the first one that
/// holds wins; AC = 0 belongs to the AC >= 0 part.
YResult y_closed_form(const YInput& in);

// Certification grid used by y_certify.
inline constexpr int kCertifyRadial = 512;
inline constexpr int kCertifyAngular = 2048;

/// Brute-force maximum over the polar grid r_j = j/radial (j = 0..radial),
/// theta_k = 2 pi k/angular (k = 0..angular-1). Requires radial >= 64 and
/// angular >= 256 (RangeError otherwise). Runs on the dispatched ring kernel.
double y_oracle(const YInput& in, int radial, int angular);

/// Upper bound on how far the grid maximum can sit below the true maximum:
/// (|B| + 2|C| + 2) (pi/angular + 1/radial).
double grid_allowance(const YInput& in, int radial, int angular) noexcept;

struct YCertification {
  bool pass = false;
  YResult closed_form;
  double oracle = 0.0;
  double discrepancy = 0.0;  // |closed_form.value - oracle|
  double allowance = 0.0;
};

YCertification certify(const YInput& in, double tol, int radial = kCertifyRadial,
                       int angular = kCertifyAngular);

/// |Y closed form - Y oracle| <= tol + grid_allowance on the certification grid.
bool y_certify(const YInput& in, double tol);

}  // namespace loghankel
