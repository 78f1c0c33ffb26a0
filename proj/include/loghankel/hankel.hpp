#pragma once

#include "loghankel/coeffs.hpp"

namespace loghankel {

/// First three logarithmic coefficients: log(f(z)/z) = 2 sum gamma_n z^n.
struct GammaTriple {
  Complex g1{};
  Complex g2{};
  Complex g3{};
};

/// g1 = a2/2, g2 = (a3 - a2^2/2)/2, g3 = (a4 - a2 a3 + a2^3/3)/2.
GammaTriple log_coeffs(const CoeffTriple& a) noexcept;

/// H21(F_f/2) = g1 g3 - g2^2, evaluated through the logarithmic coefficients.
/// Debug builds also check it against h21_monomial.
Complex h21(const CoeffTriple& a) noexcept;

/// (a2 a4 - a3^2 + a2^4/12)/4, the same quantity written in the a_n.
Complex h21_monomial(const CoeffTriple& a) noexcept;

/// Coefficients of e^{-i theta} f(e^{i theta} z): a_n -> e^{i(n-1) theta} a_n.
/// h21 picks up the factor e^{4 i theta}.
CoeffTriple rotate(const CoeffTriple& a, double theta) noexcept;

}  // namespace loghankel
