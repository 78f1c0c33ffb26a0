#if defined(LOGHANKEL_HAVE_NEON)

#include <arm_neon.h>

#include "kernels_detail.hpp"

namespace loghankel::kernels {

RingArgmax ring_argmax_neon(double a, double b, double c, const RingTable& table) noexcept {
  const std::size_t n = table.size();
  const std::size_t vec_end = n - n % 2;
  RingArgmax best;
  if (vec_end > 0) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t step = vdupq_n_f64(2.0);
    const double idx0[2] = {0.0, 1.0};
    float64x2_t idx = vld1q_f64(idx0);
    float64x2_t best_v = vdupq_n_f64(-1.0);
    float64x2_t best_i = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < vec_end; k += 2) {
      const float64x2_t c1 = vld1q_f64(table.cos1() + k);
      const float64x2_t s1 = vld1q_f64(table.sin1() + k);
      const float64x2_t c2 = vld1q_f64(table.cos2() + k);
      const float64x2_t s2 = vld1q_f64(table.sin2() + k);
      // vfmaq_f64(acc, x, y) = acc + x * y, single rounding.
      const float64x2_t re = vfmaq_f64(vfmaq_f64(va, vb, c1), vc, c2);
      const float64x2_t im = vfmaq_f64(vmulq_f64(vb, s1), vc, s2);
      const float64x2_t v = vfmaq_f64(vmulq_f64(im, im), re, re);
      const uint64x2_t gt = vcgtq_f64(v, best_v);
      best_v = vbslq_f64(gt, v, best_v);
      best_i = vbslq_f64(gt, idx, best_i);
      idx = vaddq_f64(idx, step);
    }
    double lane_v[2];
    double lane_i[2];
    vst1q_f64(lane_v, best_v);
    vst1q_f64(lane_i, best_i);
    for (int l = 0; l < 2; ++l) {
      const auto li = static_cast<std::size_t>(lane_i[l]);
      if (lane_v[l] > best.norm_sq || (lane_v[l] == best.norm_sq && li < best.index))
        best = {lane_v[l], li};
    }
  }
  detail::ring_scan(a, b, c, table, vec_end, n, best);
  return best;
}

}  // namespace loghankel::kernels

#endif
