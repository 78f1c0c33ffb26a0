#include "loghankel/hankel.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace loghankel {

GammaTriple log_coeffs(const CoeffTriple& a) noexcept {
  const Complex a2 = a.a2, a3 = a.a3, a4 = a.a4;
  return {a2 / 2.0, (a3 - a2 * a2 / 2.0) / 2.0, (a4 - a2 * a3 + a2 * a2 * a2 / 3.0) / 2.0};
}

Complex h21_monomial(const CoeffTriple& a) noexcept {
  const Complex a2sq = a.a2 * a.a2;
  return (a.a2 * a.a4 - a.a3 * a.a3 + a2sq * a2sq / 12.0) / 4.0;
}

Complex h21(const CoeffTriple& a) noexcept {
  const GammaTriple g = log_coeffs(a);
  const Complex value = g.g1 * g.g3 - g.g2 * g.g2;
#ifndef NDEBUG
  const double scale = std::max({1.0, std::norm(a.a2) * std::norm(a.a2), std::abs(a.a2 * a.a4), std::norm(a.a3)});
  assert(std::abs(value - h21_monomial(a)) <= 1e-14 * scale);
#endif
  return value;
}

CoeffTriple rotate(const CoeffTriple& a, double theta) noexcept {
  return {std::polar(1.0, theta) * a.a2, std::polar(1.0, 2.0 * theta) * a.a3, std::polar(1.0, 3.0 * theta) * a.a4};
}

}  // namespace loghankel
