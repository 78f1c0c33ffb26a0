#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "loghankel/kernels.hpp"

namespace loghankel::kernels {

namespace {

using RingFn = RingArgmax (*)(double, double, double, const RingTable&) noexcept;

RingFn function_for(SimdLevel level) noexcept {
  switch (level) {
#if defined(LOGHANKEL_HAVE_AVX2)
    case SimdLevel::avx2:
      return &ring_argmax_avx2;
#endif
#if defined(LOGHANKEL_HAVE_NEON)
    case SimdLevel::neon:
      return &ring_argmax_neon;
#endif
    default:
      return &ring_argmax_scalar;
  }
}

SimdLevel initial_level() noexcept {
  if (const char* env = std::getenv("LOGHANKEL_SIMD")) {
    try {
      const SimdLevel requested = parse_simd_level(env);
      if (is_supported(requested)) return requested;
    } catch (const std::invalid_argument&) {
    }
  }
  return detected_simd_level();
}

std::atomic<SimdLevel>& level_slot() noexcept {
  static std::atomic<SimdLevel> slot{initial_level()};
  return slot;
}

}  // namespace

std::string_view to_string(SimdLevel level) noexcept {
  switch (level) {
    case SimdLevel::avx2:
      return "avx2";
    case SimdLevel::neon:
      return "neon";
    case SimdLevel::scalar:
      break;
  }
  return "scalar";
}

SimdLevel parse_simd_level(std::string_view name) {
  if (name == "scalar") return SimdLevel::scalar;
  if (name == "avx2") return SimdLevel::avx2;
  if (name == "neon") return SimdLevel::neon;
  throw std::invalid_argument("unknown SIMD level: " + std::string(name));
}

bool is_supported(SimdLevel level) noexcept {
  switch (level) {
    case SimdLevel::scalar:
      return true;
    case SimdLevel::avx2:
#if defined(LOGHANKEL_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case SimdLevel::neon:
#if defined(LOGHANKEL_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

SimdLevel detected_simd_level() noexcept {
  if (is_supported(SimdLevel::avx2)) return SimdLevel::avx2;
  if (is_supported(SimdLevel::neon)) return SimdLevel::neon;
  return SimdLevel::scalar;
}

SimdLevel active_simd_level() noexcept { return level_slot().load(std::memory_order_relaxed); }

void set_simd_level(SimdLevel level) {
  if (!is_supported(level))
    throw std::invalid_argument("SIMD level not supported on this host: " + std::string(to_string(level)));
  level_slot().store(level, std::memory_order_relaxed);
}

RingArgmax ring_argmax(double a, double b, double c, const RingTable& table) noexcept {
  return function_for(active_simd_level())(a, b, c, table);
}

}  // namespace loghankel::kernels
