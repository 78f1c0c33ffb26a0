#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "loghankel/error.hpp"
#include "loghankel/hankel.hpp"
#include "loghankel/search.hpp"
#include "test_util.hpp"

using namespace loghankel;
using loghankel::test::close;
using loghankel::test::Gen;

namespace {

FamilySpec random_spec(Gen& gen, int which) {
  switch (which % 3) {
    case 0:
      return Spirallike{gen.uniform(0.0, 0.95), gen.uniform(-1.4, 1.4)};
    case 1:
      return Ozaki{gen.uniform(0.05, 1.0)};
    default:
      return Robertson{gen.uniform(0.5, 1.0)};
  }
}

double phase_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2.0 * std::numbers::pi);
  return std::min(d, 2.0 * std::numbers::pi - d);
}

}  // namespace

TEST_CASE("envelope: examples") {
  Envelope e = envelope(Spirallike{0, 0}, 1.0);
  CHECK(e.scale == doctest::Approx(1.0 / 12.0));
  CHECK(e.e0 == 1.0);
  CHECK(e.e1 == 0.0);
  CHECK(e.e2 == 0.0);
  CHECK(e.e3 == 0.0);
  CHECK(value_p3_optimal(e, Complex{0.3, 0.4}) == doctest::Approx(1.0 / 12.0));

  e = envelope(Spirallike{0, 0}, 0.0);
  CHECK(e.e0 == 0.0);
  CHECK(e.e1 == 0.0);
  CHECK(e.e3 == 0.0);
  CHECK(e.e2 == -3.0);
  CHECK(value_p3_optimal(e, 1.0) == doctest::Approx(0.25));

  e = envelope(Ozaki{1}, 0.0);
  CHECK(e.e2 == -16.0);
  CHECK(e.scale == doctest::Approx(1.0 / 2304.0));
  CHECK(value_p3_optimal(e, Complex{0, 1}) == doctest::Approx(1.0 / 144.0));

  CHECK_THROWS_AS(envelope(Ozaki{1}, 1.01), RangeError);
  CHECK_THROWS_AS(envelope(Ozaki{1}, -0.01), RangeError);
  CHECK_THROWS_AS(envelope(Ozaki{2}, 0.5), RangeError);
}

TEST_CASE("value_p3_optimal: pure p3 term") {
  const Envelope e{0.5, 0.0, 0.0, 0.0, 4.0 * 0.3};
  CHECK(value_p3_optimal(e, 0.0) == doctest::Approx(0.5 * 1.2));
  CHECK(close(optimal_p3(e, 0.0), 1.0, 0.0));
}

TEST_CASE("property: envelope e3 is nonnegative") {
  Gen gen(61);
  for (int trial = 0; trial < 3000; ++trial) {
    const Envelope e = envelope(random_spec(gen, trial), gen.uniform(0.0, 1.0));
    REQUIRE(e.e3 >= 0.0);
    REQUIRE(e.scale > 0.0);
  }
}

TEST_CASE("property: p3 reduction matches 4096 sampled unimodular p3") {
  Gen gen(62);
  for (int trial = 0; trial < 1000; ++trial) {
    const Envelope env = envelope(random_spec(gen, trial), gen.uniform(0.0, 1.0));
    const Complex p2 = gen.disk();
    double sampled = 0.0;
    for (int k = 0; k < 4096; ++k)
      sampled = std::max(sampled, std::abs(env.evaluate(p2, std::polar(1.0, 2.0 * std::numbers::pi * k / 4096))));
    const double reduced = value_p3_optimal(env, p2);
    // A sample lies within pi/4096 of the aligned phase: |X + |Y| e^{i d}| >= |X| + |Y| cos d.
    const double phase_grid = env.scale * env.e3 * (1.0 - std::norm(p2)) * (1.0 - std::cos(std::numbers::pi / 4096));
    REQUIRE(sampled <= reduced + 1e-9);
    REQUIRE(reduced - sampled <= 1e-9 + phase_grid);
    REQUIRE(std::abs(std::abs(env.evaluate(p2, optimal_p3(env, p2))) - reduced) <= 1e-15);
  }
}

TEST_CASE("property: envelope reproduces |H21| of the coefficient pipeline") {
  Gen gen(63);
  for (int trial = 0; trial < 1000; ++trial) {
    const FamilySpec spec = random_spec(gen, trial);
    const SchurParams sp = gen.schur();
    const double via_pipeline = std::abs(h21(coeffs_closed_form(spec, c_from_params(sp))));
    const double via_envelope = std::abs(envelope(spec, sp.p1).evaluate(sp.p2, sp.p3));
    REQUIRE(std::abs(via_pipeline - via_envelope) <= 1e-10);
  }
}

TEST_CASE("global_max: examples") {
  const SearchReport sp = global_max(Spirallike{0, 0});
  CHECK(std::abs(sp.max_abs_h21 - 0.25) <= 5e-4);
  CHECK(sp.argmax.p1 <= 2e-3);
  CHECK(std::abs(std::abs(sp.argmax.p2) - 1.0) <= 2e-3);
  CHECK(sp.gap >= -1e-9);

  const SearchReport rb = global_max(Robertson{0.5});
  CHECK(std::abs(rb.max_abs_h21 - 0.030303) <= 5e-4);
  CHECK(std::abs(rb.argmax.p1 - std::sqrt(8.0 / 44.0)) <= 2e-3);

  const SearchReport oz = global_max(Ozaki{1});
  CHECK(std::abs(oz.max_abs_h21 - 31.0 / 4416.0) <= 5e-4);
  CHECK(std::abs(oz.argmax.p1 - std::sqrt(2.0 / 23.0)) <= 2e-3);
  CHECK(oz.bound == sharp_bound(Ozaki{1}));
  CHECK(oz.gap == doctest::Approx(oz.bound - oz.max_abs_h21));
}

TEST_CASE("global_max: grid description") {
  const SearchReport r = global_max(Ozaki{0.5}, 64, 2, 1);
  CHECK(r.grid.coarse == 64);
  CHECK(r.grid.refine_rounds == 2);
  CHECK(r.grid.shrink_factor == kShrinkFactor);
  CHECK(r.grid.final_step_p1 == doctest::Approx(1.0 / (64 * 64)));
  CHECK(r.grid.final_step_phase == doctest::Approx(2.0 * std::numbers::pi / (64 * 64)));
  CHECK(r.grid.evaluations >= 65u * 65u * 64u);
  CHECK(std::abs(r.argmax.p3) == doctest::Approx(1.0));
}

TEST_CASE("global_max: range errors") {
  CHECK_THROWS_AS(global_max(Ozaki{1}, 63), RangeError);
  CHECK_THROWS_AS(global_max(Ozaki{1}, 128, 1), RangeError);
  CHECK_THROWS_AS(global_max(Robertson{0.2}), RangeError);
}

TEST_CASE("property: soundness and sharpness over random parameters") {
  Gen gen(64);
  for (int trial = 0; trial < 30; ++trial) {
    const FamilySpec spec = random_spec(gen, trial);
    const SearchReport r = global_max(spec);
    INFO(describe(spec));
    REQUIRE(r.gap >= -1e-9);
    REQUIRE(r.gap <= 5e-4);
  }
}

TEST_CASE("property: argmax sits at the critical point with p2 = -1") {
  Gen gen(65);
  for (int trial = 0; trial < 10; ++trial) {
    const FamilySpec spec = trial % 2 ? FamilySpec{Ozaki{gen.uniform(0.1, 1.0)}}
                                      : FamilySpec{Robertson{gen.uniform(0.5, 1.0)}};
    const SearchReport r = global_max(spec);
    INFO(describe(spec));
    REQUIRE(std::abs(r.argmax.p1 - s_critical(spec)) <= 2e-3);
    REQUIRE(std::abs(std::abs(r.argmax.p2) - 1.0) <= 2e-3);
    REQUIRE(phase_distance(std::arg(r.argmax.p2), std::numbers::pi) <= 2e-3);
  }
}

TEST_CASE("global_max does not depend on the worker count") {
  for (const FamilySpec spec : {FamilySpec{Ozaki{0.7}}, FamilySpec{Spirallike{0.2, 0.4}}}) {
    const SearchReport one = global_max(spec, 96, 3, 1);
    for (const unsigned workers : {2u, 3u, 7u}) {
      const SearchReport many = global_max(spec, 96, 3, workers);
      REQUIRE(many.max_abs_h21 == one.max_abs_h21);
      REQUIRE(many.argmax.p1 == one.argmax.p1);
      REQUIRE(many.argmax.p2 == one.argmax.p2);
      REQUIRE(many.argmax.p3 == one.argmax.p3);
      REQUIRE(many.grid.evaluations == one.grid.evaluations);
    }
  }
}

TEST_CASE("sweep: examples") {
  const std::array alphas{0.0, 0.25, 0.5};
  const SweepResult s = sweep(FamilyTag::spirallike, alphas);
  REQUIRE(s.reports.size() == 3);
  CHECK(s.reports[0].bound == doctest::Approx(0.25));
  CHECK(s.reports[1].bound == doctest::Approx(0.140625));
  CHECK(s.reports[2].bound == doctest::Approx(0.0625));
  CHECK(s.bound_trend == Trend::decreasing);
  for (const auto& r : s.reports) CHECK(r.gap <= 5e-4);

  const std::array lambdas{0.5, 1.0};
  const SweepResult rb = sweep(FamilyTag::robertson, lambdas);
  CHECK(std::abs(rb.reports[0].bound - 0.030303) <= 5e-7);
  CHECK(std::abs(rb.reports[1].bound - 0.070811) <= 5e-7);
  CHECK(rb.bound_trend == Trend::increasing);

  const std::array nus{0.5, 1.0};
  const SweepResult oz = sweep(FamilyTag::ozaki, nus);
  CHECK(oz.reports[0].bound == doctest::Approx(sharp_bound(Ozaki{0.5})));
  CHECK(oz.reports[1].bound == doctest::Approx(31.0 / 4416.0));
}

TEST_CASE("sweep: trends and range errors") {
  const std::array single{0.3};
  CHECK(sweep(FamilyTag::ozaki, single).bound_trend == Trend::constant);
  const std::array bad{0.5, 1.5};
  CHECK_THROWS_AS(sweep(FamilyTag::robertson, bad), RangeError);
  CHECK_THROWS_AS(family_with_parameter(FamilyTag::spirallike, 0.2, 2.0), RangeError);
  CHECK(to_string(Trend::mixed) == "mixed");
}
