#pragma once

#include <cmath>
#include <cstddef>

#include "loghankel/kernels.hpp"

namespace loghankel::kernels::detail {

inline double ring_norm_sq(double a, double b, double c, double cos1, double sin1, double cos2,
                           double sin2) noexcept {
  const double re = std::fma(c, cos2, std::fma(b, cos1, a));
  const double im = std::fma(c, sin2, b * sin1);
  return std::fma(re, re, im * im);
}

// Scalar scan of [first, last) folded into `best` with strict-greater updates.
inline void ring_scan(double a, double b, double c, const RingTable& t, std::size_t first,
                      std::size_t last, RingArgmax& best) noexcept {
  const double* c1 = t.cos1();
  const double* s1 = t.sin1();
  const double* c2 = t.cos2();
  const double* s2 = t.sin2();
  for (std::size_t k = first; k < last; ++k) {
    const double v = ring_norm_sq(a, b, c, c1[k], s1[k], c2[k], s2[k]);
    if (v > best.norm_sq) best = {v, k};
  }
}

}  // namespace loghankel::kernels::detail
