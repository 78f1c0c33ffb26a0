#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "loghankel/caratheodory.hpp"
#include "loghankel/coeffs.hpp"
#include "loghankel/series.hpp"

namespace loghankel {

/// beta-spirallike functions of order alpha:
///   Re(e^{-i beta} z f'(z)/f(z)) > alpha cos beta,  0 <= alpha < 1, |beta| < pi/2.
struct Spirallike {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Ozaki-type class: Re(1 + z f''/f') < 1 + nu/2,  0 < nu <= 1.
struct Ozaki {
  double nu = 1.0;
};

/// Robertson class: Re(1 + z f''/f') > 1/2 - lambda,  1/2 <= lambda <= 1.
struct Robertson {
  double lambda = 0.5;
};

using FamilySpec = std::variant<Spirallike, Ozaki, Robertson>;

enum class FamilyTag { spirallike, ozaki, robertson };

FamilyTag tag_of(const FamilySpec& spec) noexcept;
std::string_view to_string(FamilyTag tag) noexcept;

/// Parses "spirallike", "ozaki", "robertson". Throws RangeError otherwise.
FamilyTag parse_family_tag(std::string_view name);

/// e.g. "spirallike(alpha=0, beta=0)".
std::string describe(const FamilySpec& spec);

/// Throws RangeError when the parameters leave the admissible range.
void validate(const FamilySpec& spec);

/// Printed closed forms for (a2, a3, a4) in terms of (c1, c2, c3).
///
/// Ozaki uses the coefficients of the direct solve of nu (p - 1) f' = -2 z f'':
/// a2 = -nu c1/4 and a4 cubic in c1. Flipping the sign of a2 and a4 together
/// (the rotation by pi) leaves every Hankel quantity below unchanged.
CoeffTriple coeffs_closed_form(const FamilySpec& spec, const CTriple& c);

/// Solves the defining relation of the family coefficient by coefficient for
/// the given Caratheodory series p (p(0) = 1, otherwise BranchError):
///   spirallike  z f' = q f,  q = e^{i beta}(((1-alpha) p + alpha) cos beta - i sin beta)
///   ozaki       2 z f'' = -nu (p - 1) f'
///   robertson   z f'' = ((2 lambda + 1)/2)(p - 1) f'
/// Needs order(p) >= 3.
CoeffTriple coeffs_ode_oracle(const FamilySpec& spec, const PowerSeries& p);

/// Coefficients of the function attaining the sharp bound.
CoeffTriple extremal_coeffs(const FamilySpec& spec);

/// Schur parameter p1 of the extremal function for Ozaki and Robertson:
///   ozaki      sqrt(2(nu-2)/(nu^2+8nu-32))
///   robertson  sqrt(-2(2 lambda+3)/(4 lambda^2-12 lambda-39))
/// Throws std::invalid_argument for Spirallike, whose extremum sits at p1 = 0.
double s_critical(const FamilySpec& spec);

/// Sharp upper bound of |H21(F_f/2)| over the family.
double sharp_bound(const FamilySpec& spec);

/// Caratheodory function driving the extremal member: (1+z^2)/(1-z^2) for
/// Spirallike, (1-z^2)/(1-2sz+z^2) with s = s_critical otherwise.
RationalFunction extremal_generator(const FamilySpec& spec);

/// Smallest margin by which the extremal member satisfies its class
/// inequality over `samples` points of |z| = radius. Positive means the
/// sampled points satisfy the class condition.
double extremal_membership_margin(const FamilySpec& spec, double radius, int samples);

}  // namespace loghankel
