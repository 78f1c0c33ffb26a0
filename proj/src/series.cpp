#include "loghankel/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loghankel/error.hpp"

namespace loghankel {

namespace {

std::size_t common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}

std::vector<Complex> padded(std::span<const Complex> poly, std::size_t order) {
  std::vector<Complex> out(order + 1);
  std::copy_n(poly.begin(), std::min(poly.size(), out.size()), out.begin());
  return out;
}

}  // namespace

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

PowerSeries PowerSeries::constant(Complex value, std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

PowerSeries PowerSeries::variable(std::size_t order) {
  PowerSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1.0;
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  return PowerSeries(padded(coeffs_, order));
}

Complex PowerSeries::evaluate(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  coeffs_.resize(common_order(*this, rhs) + 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  coeffs_.resize(common_order(*this, rhs) + 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator*=(Complex scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = common_order(a, b);
  PowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc{};
    for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    out[n] = acc;
  }
  return out;
}

PowerSeries div(const PowerSeries& a, const PowerSeries& b) {
  if (b[0] == Complex{}) throw SingularError("series division: divisor has zero constant term");
  const std::size_t order = common_order(a, b);
  PowerSeries q(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc = a[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= b[k] * q[n - k];
    q[n] = acc / b[0];
  }
  return q;
}

PowerSeries log_unit(const PowerSeries& a) {
  if (std::abs(a[0] - 1.0) > kUnitTolerance)
    throw BranchError("log_unit: constant term must be 1");
  // s' a = a'  =>  n s_n = n a_n - sum_{k=1}^{n-1} k s_k a_{n-k}
  PowerSeries s(a.order());
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Complex acc = static_cast<double>(n) * a[n];
    for (std::size_t k = 1; k < n; ++k) acc -= static_cast<double>(k) * s[k] * a[n - k];
    s[n] = acc / (static_cast<double>(n) * a[0]);
  }
  return s;
}

PowerSeries exp_unit(const PowerSeries& a) {
  if (std::abs(a[0]) > kUnitTolerance) throw BranchError("exp_unit: constant term must be 0");
  // b' = a' b  =>  n b_n = sum_{k=1}^{n} k a_k b_{n-k}
  PowerSeries b(a.order());
  b[0] = 1.0;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Complex acc{};
    for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * a[k] * b[n - k];
    b[n] = acc / static_cast<double>(n);
  }
  return b;
}

PowerSeries pow_complex(const PowerSeries& a, Complex w) {
  PowerSeries s = log_unit(a);
  s *= w;
  s[0] = 0.0;
  return exp_unit(s);
}

PowerSeries derivative(const PowerSeries& a) {
  if (a.order() == 0) return PowerSeries(std::size_t{0});
  PowerSeries d(a.order() - 1);
  for (std::size_t n = 1; n <= a.order(); ++n) d[n - 1] = static_cast<double>(n) * a[n];
  return d;
}

RationalFunction::RationalFunction(std::vector<Complex> numerator, std::vector<Complex> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_.empty()) numerator_.resize(1);
  if (denominator_.empty() || denominator_[0] == Complex{})
    throw SingularError("rational function: denominator has zero constant term");
}

Complex RationalFunction::evaluate(Complex z) const noexcept {
  auto horner = [z](std::span<const Complex> poly) {
    Complex acc{};
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  return horner(numerator_) / horner(denominator_);
}

PowerSeries RationalFunction::series(std::size_t order) const {
  return div(PowerSeries(padded(numerator_, order)), PowerSeries(padded(denominator_, order)));
}

}  // namespace loghankel
