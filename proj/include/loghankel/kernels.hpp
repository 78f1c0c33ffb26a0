#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace loghankel::kernels {

/// Precomputed cos t, sin t, cos 2t, sin 2t for a set of angles t_k.
class RingTable {
 public:
  RingTable() = default;
  explicit RingTable(std::span<const double> angles);

  /// t_k = 2 pi k / period for k = 0 .. count-1.
  static RingTable uniform(std::size_t count, std::size_t period);

  std::size_t size() const noexcept { return cos1_.size(); }
  const double* cos1() const noexcept { return cos1_.data(); }
  const double* sin1() const noexcept { return sin1_.data(); }
  const double* cos2() const noexcept { return cos2_.data(); }
  const double* sin2() const noexcept { return sin2_.data(); }
  std::span<const double> angles() const noexcept { return angles_; }

 private:
  std::vector<double> angles_, cos1_, sin1_, cos2_, sin2_;
};

struct RingArgmax {
  double norm_sq = -1.0;
  std::size_t index = 0;
};

// max_k |a + b e^{i t_k} + c e^{2 i t_k}|^2 for real a, b, c, and the first k
// attaining it. Every variant evaluates
//   re = fma(c, cos2, fma(b, cos1, a)), im = fma(c, sin2, b * sin1),
//   |.|^2 = fma(re, re, im * im)
// so all variants return bit-identical results. Empty tables give norm_sq = -1.
RingArgmax ring_argmax_scalar(double a, double b, double c, const RingTable& table) noexcept;
#if defined(LOGHANKEL_HAVE_AVX2)
RingArgmax ring_argmax_avx2(double a, double b, double c, const RingTable& table) noexcept;
#endif
#if defined(LOGHANKEL_HAVE_NEON)
RingArgmax ring_argmax_neon(double a, double b, double c, const RingTable& table) noexcept;
#endif

enum class SimdLevel { scalar, avx2, neon };

std::string_view to_string(SimdLevel level) noexcept;

/// Parses "scalar", "avx2", "neon". Throws std::invalid_argument otherwise.
SimdLevel parse_simd_level(std::string_view name);

/// Best variant compiled in and supported by the running CPU.
SimdLevel detected_simd_level() noexcept;

/// Variant used by ring_argmax. Defaults to detected_simd_level(), or to the
/// LOGHANKEL_SIMD environment variable when it names a supported level.
SimdLevel active_simd_level() noexcept;

/// Throws std::invalid_argument if `level` is not supported here.
void set_simd_level(SimdLevel level);

bool is_supported(SimdLevel level) noexcept;

RingArgmax ring_argmax(double a, double b, double c, const RingTable& table) noexcept;

}  // namespace loghankel::kernels
