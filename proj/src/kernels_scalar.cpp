#include <numbers>

#include "kernels_detail.hpp"

// FMA clone for x86-64; bit-identical to the default clone.
#if defined(__x86_64__) && defined(__has_attribute)
#if __has_attribute(target_clones)
#define LOGHANKEL_FMA_CLONES __attribute__((target_clones("fma", "default")))
#endif
#endif
#ifndef LOGHANKEL_FMA_CLONES
#define LOGHANKEL_FMA_CLONES
#endif

namespace loghankel::kernels {

RingTable::RingTable(std::span<const double> angles)
    : angles_(angles.begin(), angles.end()),
      cos1_(angles.size()),
      sin1_(angles.size()),
      cos2_(angles.size()),
      sin2_(angles.size()) {
  for (std::size_t k = 0; k < angles.size(); ++k) {
    cos1_[k] = std::cos(angles[k]);
    sin1_[k] = std::sin(angles[k]);
    cos2_[k] = std::cos(2.0 * angles[k]);
    sin2_[k] = std::sin(2.0 * angles[k]);
  }
}

RingTable RingTable::uniform(std::size_t count, std::size_t period) {
  std::vector<double> angles(count);
  for (std::size_t k = 0; k < count; ++k)
    angles[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(period);
  return RingTable(angles);
}

LOGHANKEL_FMA_CLONES
RingArgmax ring_argmax_scalar(double a, double b, double c, const RingTable& table) noexcept {
  RingArgmax best;
  detail::ring_scan(a, b, c, table, 0, table.size(), best);
  return best;
}

}  // namespace loghankel::kernels
