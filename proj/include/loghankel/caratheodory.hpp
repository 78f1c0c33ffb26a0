#pragma once

#include "loghankel/series.hpp"

namespace loghankel {

// Slack on |p2|, |p3| <= 1 for unimodular inputs built as e^{i t}.
inline constexpr double kSchurSlack = 1e-12;

// Classical bound |c_n| <= 2, with slack for floating-point representatives.
inline constexpr double kCoefficientSlack = 1e-9;

/// Schur-type parameters of the first three Caratheodory coefficients:
/// p1 in [0, 1] (c1 rotated to be real), p2 and p3 in the closed unit disk.
struct SchurParams {
  double p1 = 0.0;
  Complex p2{};
  Complex p3{};
};

/// Throws RangeError unless 0 <= p1 <= 1 and |p2|, |p3| <= 1 + kSchurSlack.
void validate(const SchurParams& params);

/// First three Taylor coefficients of p(z) = 1 + c1 z + c2 z^2 + c3 z^3 + ...
struct CTriple {
  Complex c1{};
  Complex c2{};
  Complex c3{};
};

bool within_coefficient_bound(const CTriple& c, double slack = kCoefficientSlack) noexcept;

/// c1 = 2p1
/// c2 = 2p1^2 + 2(1-p1^2)p2
/// c3 = 2p1^3 + 4(1-p1^2)p1p2 - 2(1-p1^2)p1p2^2 + 2(1-p1^2)(1-|p2|^2)p3
CTriple c_from_params(const SchurParams& params);

/// The polynomial 1 + c1 z + c2 z^2 + c3 z^3 padded to `order`.
PowerSeries caratheodory_series(const CTriple& c, std::size_t order = kDefaultOrder);

/// (1 + p1 z) / (1 - p1 z); unique member of the class for |p1| = 1.
/// Throws RangeError for |p1| > 1.
RationalFunction rep_degree1(Complex p1);

/// (1 + (p1 + conj(p1) p2) z + p2 z^2) / (1 - (p1 - conj(p1) p2) z - p2 z^2).
/// Unique member for |p1| < 1, |p2| = 1; interior p2 is accepted as well.
/// Throws RangeError when |p1| or |p2| exceeds 1 + kSchurSlack.
RationalFunction rep_degree2(Complex p1, Complex p2);

/// Falsification check for membership in the Caratheodory class: Re p > 0 at
/// `samples` equispaced points of |z| = radius and |c_n| <= 2 + 1e-9 for every
/// retained n >= 1. The PowerSeries overload evaluates the truncated
/// polynomial; use the RationalFunction overload for closed-form members.
bool validate_caratheodory(const PowerSeries& p, double radius, int samples);
bool validate_caratheodory(const RationalFunction& p, double radius, int samples,
                           std::size_t order = kDefaultOrder);

}  // namespace loghankel
