#include <doctest.h>

#include <cmath>

#include "loghankel/families.hpp"
#include "loghankel/hankel.hpp"
#include "test_util.hpp"

using namespace loghankel;
using loghankel::test::close;
using loghankel::test::Gen;

namespace {

// f(z)/z = 1 + a2 z + a3 z^2 + a4 z^3
PowerSeries f_over_z(const CoeffTriple& a, std::size_t order = 3) {
  PowerSeries s = PowerSeries::constant(1.0, order);
  s[1] = a.a2;
  s[2] = a.a3;
  s[3] = a.a4;
  return s;
}

CoeffTriple random_coeffs(Gen& gen) { return {gen.box(2.0), gen.box(3.0), gen.box(4.0)}; }

}  // namespace

TEST_CASE("Koebe function") {
  const CoeffTriple koebe{2, 3, 4};
  const GammaTriple g = log_coeffs(koebe);
  CHECK(close(g.g1, 1.0, 1e-15));
  CHECK(close(g.g2, 0.5, 1e-15));
  CHECK(close(g.g3, 1.0 / 3.0, 1e-15));
  CHECK(close(h21(koebe), 1.0 / 12.0, 1e-15));
  CHECK(close(h21_monomial(koebe), 1.0 / 12.0, 1e-15));
}

TEST_CASE("Koebe logarithmic coefficients are 1/n up to n = 10") {
  PowerSeries koebe_over_z(10);
  for (std::size_t n = 0; n <= 10; ++n) koebe_over_z[n] = static_cast<double>(n + 1);
  const PowerSeries lg = log_unit(koebe_over_z);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(close(lg[n] / 2.0, 1.0 / static_cast<double>(n), 1e-12));
}

TEST_CASE("identity function has vanishing coefficients") {
  const GammaTriple g = log_coeffs({0, 0, 0});
  CHECK(g.g1 == Complex{});
  CHECK(g.g2 == Complex{});
  CHECK(g.g3 == Complex{});
  CHECK(h21({0, 0, 0}) == Complex{});
}

TEST_CASE("rotate multiplies a_n by e^{i(n-1) theta}") {
  const CoeffTriple r = rotate({2, 3, 4}, std::numbers::pi / 2);
  CHECK(close(r.a2, Complex{0, 2}, 1e-15));
  CHECK(close(r.a3, -3.0, 1e-15));
  CHECK(close(r.a4, Complex{0, -4}, 1e-15));
  // Rotation by pi flips a2 and a4.
  const CoeffTriple flip = rotate({2, 3, 4}, std::numbers::pi);
  CHECK(close(flip.a2, -2.0, 1e-15));
  CHECK(close(flip.a3, 3.0, 1e-15));
  CHECK(close(flip.a4, -4.0, 1e-14));
}

TEST_CASE("property: rotation equivariance of H21") {
  Gen gen(51);
  for (int trial = 0; trial < 1000; ++trial) {
    const CoeffTriple a = random_coeffs(gen);
    const double theta = gen.uniform(0.0, 2.0 * std::numbers::pi);
    REQUIRE(close(h21(rotate(a, theta)), std::polar(1.0, 4.0 * theta) * h21(a), 1e-12));
  }
}

TEST_CASE("property: gamma path matches the monomial path") {
  Gen gen(52);
  for (int trial = 0; trial < 10000; ++trial) {
    const CoeffTriple a = random_coeffs(gen);
    REQUIRE(close(h21(a), h21_monomial(a), 1e-13));
  }
}

TEST_CASE("property: log_coeffs match the series logarithm of f/z") {
  Gen gen(53);
  for (int trial = 0; trial < 1000; ++trial) {
    const CoeffTriple a = random_coeffs(gen);
    const PowerSeries lg = log_unit(f_over_z(a));
    const GammaTriple g = log_coeffs(a);
    REQUIRE(close(g.g1, lg[1] / 2.0, 1e-13));
    REQUIRE(close(g.g2, lg[2] / 2.0, 1e-13));
    REQUIRE(close(g.g3, lg[3] / 2.0, 1e-12));
  }
}

TEST_CASE("extremal rotation of Koebe attains 1/4") {
  CHECK(close(h21(extremal_coeffs(Spirallike{0, 0})), -0.25, 1e-15));
}
