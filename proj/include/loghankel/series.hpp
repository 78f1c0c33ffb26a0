#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace loghankel {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 10;

// Absolute tolerance for "constant term equals 1" / "equals 0" checks.
inline constexpr double kUnitTolerance = 1e-12;

/// Truncated power series sum_{n=0}^{order} c_n z^n with complex coefficients.
///
/// Binary operations truncate to the smaller of the two orders. All
/// operations are pure and return new values.
class PowerSeries {
 public:
  /// Zero series of the given order.
  explicit PowerSeries(std::size_t order = kDefaultOrder);

  /// Takes ownership of the coefficients; order is coeffs.size() - 1. An
  /// empty vector yields the order-0 zero series.
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries constant(Complex value, std::size_t order = kDefaultOrder);

  /// The series z (zero for order 0).
  static PowerSeries variable(std::size_t order = kDefaultOrder);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  Complex operator[](std::size_t n) const { return coeffs_[n]; }
  Complex& operator[](std::size_t n) { return coeffs_[n]; }

  /// Coefficient of z^n, or 0 beyond the retained order.
  Complex coeff(std::size_t n) const noexcept {
    return n < coeffs_.size() ? coeffs_[n] : Complex{};
  }

  PowerSeries truncated(std::size_t order) const;

  /// Horner evaluation of the retained polynomial.
  Complex evaluate(Complex z) const noexcept;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(Complex scalar);

  friend PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
  friend PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }
  friend PowerSeries operator*(PowerSeries lhs, Complex s) { return lhs *= s; }
  friend PowerSeries operator*(Complex s, PowerSeries rhs) { return rhs *= s; }
  friend PowerSeries operator-(PowerSeries s) { return s *= Complex{-1.0}; }

 private:
  std::vector<Complex> coeffs_;
};

/// Cauchy product truncated to min(order(a), order(b)).
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

/// q with q*b == a to the common order. Throws SingularError when b(0) == 0.
PowerSeries div(const PowerSeries& a, const PowerSeries& b);

/// Principal logarithm of a series with a(0) == 1; result has constant term 0.
/// Computed from the recurrence n s_n = n a_n - sum_{k<n} k s_k a_{n-k}.
/// Throws BranchError when |a(0) - 1| > kUnitTolerance.
PowerSeries log_unit(const PowerSeries& a);

/// Exponential of a series with a(0) == 0. Throws BranchError otherwise.
PowerSeries exp_unit(const PowerSeries& a);

/// a^w = exp(w log a) for a(0) == 1 (principal branch).
PowerSeries pow_complex(const PowerSeries& a, Complex w);

/// Termwise derivative; order drops by one (order-0 input gives the zero
/// series of order 0).
PowerSeries derivative(const PowerSeries& a);

inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }
inline PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return div(a, b); }

/// num(z) / den(z) for polynomial numerator and denominator, den(0) != 0.
///
/// Kept separate from PowerSeries because positivity checks near the unit
/// circle need the exact function, not its truncation.
class RationalFunction {
 public:
  RationalFunction(std::vector<Complex> numerator, std::vector<Complex> denominator);

  Complex evaluate(Complex z) const noexcept;
  PowerSeries series(std::size_t order = kDefaultOrder) const;

  std::span<const Complex> numerator() const noexcept { return numerator_; }
  std::span<const Complex> denominator() const noexcept { return denominator_; }

 private:
  std::vector<Complex> numerator_;
  std::vector<Complex> denominator_;
};

}  // namespace loghankel
