#include <immintrin.h>

#include "kernels_detail.hpp"

namespace loghankel::kernels {

RingArgmax ring_argmax_avx2(double a, double b, double c, const RingTable& table) noexcept {
  const std::size_t n = table.size();
  const std::size_t vec_end = n - n % 4;
  RingArgmax best;
  if (vec_end > 0) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d step = _mm256_set1_pd(4.0);
    __m256d idx = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    __m256d best_v = _mm256_set1_pd(-1.0);
    __m256d best_i = _mm256_setzero_pd();
    for (std::size_t k = 0; k < vec_end; k += 4) {
      const __m256d c1 = _mm256_loadu_pd(table.cos1() + k);
      const __m256d s1 = _mm256_loadu_pd(table.sin1() + k);
      const __m256d c2 = _mm256_loadu_pd(table.cos2() + k);
      const __m256d s2 = _mm256_loadu_pd(table.sin2() + k);
      const __m256d re = _mm256_fmadd_pd(vc, c2, _mm256_fmadd_pd(vb, c1, va));
      const __m256d im = _mm256_fmadd_pd(vc, s2, _mm256_mul_pd(vb, s1));
      const __m256d v = _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
      const __m256d gt = _mm256_cmp_pd(v, best_v, _CMP_GT_OQ);
      best_v = _mm256_blendv_pd(best_v, v, gt);
      best_i = _mm256_blendv_pd(best_i, idx, gt);
      idx = _mm256_add_pd(idx, step);
    }
    alignas(32) double lane_v[4];
    alignas(32) double lane_i[4];
    _mm256_store_pd(lane_v, best_v);
    _mm256_store_pd(lane_i, best_i);
    // Largest value; among equal values the smallest index, as in the scalar scan.
    for (int l = 0; l < 4; ++l) {
      const auto li = static_cast<std::size_t>(lane_i[l]);
      if (lane_v[l] > best.norm_sq || (lane_v[l] == best.norm_sq && li < best.index))
        best = {lane_v[l], li};
    }
  }
  detail::ring_scan(a, b, c, table, vec_end, n, best);
  return best;
}

}  // namespace loghankel::kernels
