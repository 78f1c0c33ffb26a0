#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loghankel/kernels.hpp"
#include "test_util.hpp"

using namespace loghankel::kernels;
using loghankel::test::Gen;

namespace {

// Plain complex arithmetic, no fma: an independent reference for the argmax.
double reference_norm_sq(double a, double b, double c, double t) {
  const std::complex<double> z = std::polar(1.0, t);
  return std::norm(a + b * z + c * z * z);
}

struct LevelGuard {
  SimdLevel saved = active_simd_level();
  ~LevelGuard() { set_simd_level(saved); }
};

}  // namespace

TEST_CASE("ring table layout") {
  const RingTable t = RingTable::uniform(4, 8);
  REQUIRE(t.size() == 4);
  CHECK(t.angles()[2] == doctest::Approx(std::numbers::pi / 2));
  CHECK(t.cos1()[2] == doctest::Approx(0.0));
  CHECK(t.sin2()[1] == doctest::Approx(1.0));
  CHECK(t.cos2()[2] == doctest::Approx(-1.0));
}

TEST_CASE("scalar kernel: known maxima") {
  const RingTable t = RingTable::uniform(8, 8);
  // |1 + z + z^2| is 3 at z = 1.
  RingArgmax r = ring_argmax_scalar(1, 1, 1, t);
  CHECK(r.norm_sq == doctest::Approx(9.0));
  CHECK(r.index == 0);
  // |1 - z| is 2 at z = -1.
  r = ring_argmax_scalar(1, -1, 0, t);
  CHECK(r.norm_sq == doctest::Approx(4.0));
  CHECK(r.index == 4);
  // Constant: every entry ties, the first wins.
  r = ring_argmax_scalar(2, 0, 0, t);
  CHECK(r.norm_sq == 4.0);
  CHECK(r.index == 0);
  CHECK(ring_argmax_scalar(1, 1, 1, RingTable{}).norm_sq == -1.0);
}

TEST_CASE("scalar kernel agrees with complex arithmetic") {
  Gen gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 300));
    const RingTable t = RingTable::uniform(n, n + static_cast<std::size_t>(trial % 3));
    const double a = gen.uniform(-5, 5), b = gen.uniform(-5, 5), c = gen.uniform(-5, 5);
    const RingArgmax r = ring_argmax_scalar(a, b, c, t);
    double best = -1.0;
    for (std::size_t k = 0; k < n; ++k) best = std::max(best, reference_norm_sq(a, b, c, t.angles()[k]));
    REQUIRE(r.norm_sq == doctest::Approx(best).epsilon(1e-13));
    REQUIRE(reference_norm_sq(a, b, c, t.angles()[r.index]) == doctest::Approx(best).epsilon(1e-13));
  }
}

TEST_CASE("every supported SIMD variant is bit-identical to scalar") {
  Gen gen(22);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::size_t>(gen.uniform(0, 70));
    std::vector<double> angles(n);
    for (auto& t : angles) t = gen.uniform(-7, 7);
    // Duplicate entries exercise the tie-break across lanes.
    if (n > 6 && trial % 2) angles[5] = angles[1];
    const RingTable t(angles);
    double a = gen.uniform(-5, 5), b = gen.uniform(-5, 5), c = gen.uniform(-5, 5);
    if (trial % 7 == 0) b = c = 0.0;
    const RingArgmax ref = ring_argmax_scalar(a, b, c, t);
#if defined(LOGHANKEL_HAVE_AVX2)
    if (is_supported(SimdLevel::avx2)) {
      const RingArgmax v = ring_argmax_avx2(a, b, c, t);
      REQUIRE(v.norm_sq == ref.norm_sq);
      REQUIRE(v.index == ref.index);
    }
#endif
#if defined(LOGHANKEL_HAVE_NEON)
    const RingArgmax v = ring_argmax_neon(a, b, c, t);
    REQUIRE(v.norm_sq == ref.norm_sq);
    REQUIRE(v.index == ref.index);
#endif
  }
}

TEST_CASE("uniform tables: SIMD variants match scalar across sizes") {
  for (std::size_t n = 1; n <= 40; ++n) {
    const RingTable t = RingTable::uniform(n, n);
    for (const double a : {1.0, -0.5, 3.25}) {
      const RingArgmax ref = ring_argmax_scalar(a, 0.75, -1.5, t);
      const RingArgmax dispatched = ring_argmax(a, 0.75, -1.5, t);
      REQUIRE(dispatched.norm_sq == ref.norm_sq);
      REQUIRE(dispatched.index == ref.index);
    }
  }
}

TEST_CASE("dispatch levels") {
  LevelGuard guard;
  CHECK(is_supported(SimdLevel::scalar));
  CHECK(is_supported(detected_simd_level()));
  CHECK(parse_simd_level("scalar") == SimdLevel::scalar);
  CHECK(parse_simd_level("avx2") == SimdLevel::avx2);
  CHECK(parse_simd_level("neon") == SimdLevel::neon);
  CHECK_THROWS_AS(parse_simd_level("sse9"), std::invalid_argument);
  CHECK(to_string(SimdLevel::avx2) == "avx2");

  set_simd_level(SimdLevel::scalar);
  CHECK(active_simd_level() == SimdLevel::scalar);
  for (const SimdLevel level : {SimdLevel::avx2, SimdLevel::neon}) {
    if (is_supported(level)) {
      set_simd_level(level);
      CHECK(active_simd_level() == level);
    } else {
      CHECK_THROWS_AS(set_simd_level(level), std::invalid_argument);
    }
  }
}
