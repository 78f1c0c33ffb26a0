#include "loghankel/caratheodory.hpp"

#include <cmath>
#include <numbers>

#include "loghankel/error.hpp"

namespace loghankel {

namespace {

bool coefficients_bounded(const PowerSeries& p) {
  for (std::size_t n = 1; n <= p.order(); ++n)
    if (std::abs(p[n]) > 2.0 + kCoefficientSlack) return false;
  return true;
}

template <class Eval>
bool positive_on_circle(Eval&& eval, double radius, int samples) {
  if (!(radius > 0.0 && radius < 1.0) || samples <= 0) return false;
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    if (!(eval(std::polar(radius, theta)).real() > 0.0)) return false;
  }
  return true;
}

}  // namespace

void validate(const SchurParams& params) {
  if (!(params.p1 >= 0.0 && params.p1 <= 1.0)) throw RangeError("Schur parameter p1 must lie in [0, 1]");
  if (!(std::abs(params.p2) <= 1.0 + kSchurSlack)) throw RangeError("Schur parameter |p2| must be <= 1");
  if (!(std::abs(params.p3) <= 1.0 + kSchurSlack)) throw RangeError("Schur parameter |p3| must be <= 1");
}

bool within_coefficient_bound(const CTriple& c, double slack) noexcept {
  return std::abs(c.c1) <= 2.0 + slack && std::abs(c.c2) <= 2.0 + slack && std::abs(c.c3) <= 2.0 + slack;
}

CTriple c_from_params(const SchurParams& params) {
  validate(params);
  const double p1 = params.p1;
  const Complex p2 = params.p2;
  const Complex p3 = params.p3;
  const double q = 1.0 - p1 * p1;
  const double p2_defect = 1.0 - std::norm(p2);
  return CTriple{
      .c1 = 2.0 * p1,
      .c2 = 2.0 * p1 * p1 + 2.0 * q * p2,
      .c3 = 2.0 * p1 * p1 * p1 + 4.0 * q * p1 * p2 - 2.0 * q * p1 * p2 * p2 + 2.0 * q * p2_defect * p3,
  };
}

PowerSeries caratheodory_series(const CTriple& c, std::size_t order) {
  PowerSeries p = PowerSeries::constant(1.0, order);
  const Complex cs[] = {c.c1, c.c2, c.c3};
  for (std::size_t n = 1; n <= 3 && n <= order; ++n) p[n] = cs[n - 1];
  return p;
}

RationalFunction rep_degree1(Complex p1) {
  if (std::abs(p1) > 1.0 + kSchurSlack) throw RangeError("rep_degree1: |p1| must be <= 1");
  return RationalFunction({1.0, p1}, {1.0, -p1});
}

RationalFunction rep_degree2(Complex p1, Complex p2) {
  if (std::abs(p1) > 1.0 + kSchurSlack) throw RangeError("rep_degree2: |p1| must be <= 1");
  if (std::abs(p2) > 1.0 + kSchurSlack) throw RangeError("rep_degree2: |p2| must be <= 1");
  const Complex p1_bar = std::conj(p1);
  return RationalFunction({1.0, p1 + p1_bar * p2, p2}, {1.0, -(p1 - p1_bar * p2), -p2});
}

bool validate_caratheodory(const PowerSeries& p, double radius, int samples) {
  if (std::abs(p[0] - 1.0) > kUnitTolerance) return false;
  return coefficients_bounded(p) &&
         positive_on_circle([&p](Complex z) { return p.evaluate(z); }, radius, samples);
}

bool validate_caratheodory(const RationalFunction& p, double radius, int samples, std::size_t order) {
  const PowerSeries expansion = p.series(order);
  if (std::abs(expansion[0] - 1.0) > kUnitTolerance) return false;
  return coefficients_bounded(expansion) &&
         positive_on_circle([&p](Complex z) { return p.evaluate(z); }, radius, samples);
}

}  // namespace loghankel
