#include "loghankel/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "loghankel/error.hpp"

namespace loghankel {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// (1 - alpha) cos(beta) e^{i beta}
Complex spiral_weight(const Spirallike& s) {
  return (1.0 - s.alpha) * std::cos(s.beta) * std::polar(1.0, s.beta);
}

double robertson_k(const Robertson& r) { return 2.0 * r.lambda + 1.0; }

// f = z + a2 z^2 + ..., from the coefficients h_m of f' = sum h_m z^m.
CoeffTriple from_derivative(std::span<const Complex> h) {
  return {h[1] / 2.0, h[2] / 3.0, h[3] / 4.0};
}

}  // namespace

FamilyTag tag_of(const FamilySpec& spec) noexcept {
  return static_cast<FamilyTag>(spec.index());
}

std::string_view to_string(FamilyTag tag) noexcept {
  switch (tag) {
    case FamilyTag::spirallike:
      return "spirallike";
    case FamilyTag::ozaki:
      return "ozaki";
    case FamilyTag::robertson:
      return "robertson";
  }
  return "unknown";
}

FamilyTag parse_family_tag(std::string_view name) {
  if (name == "spirallike") return FamilyTag::spirallike;
  if (name == "ozaki") return FamilyTag::ozaki;
  if (name == "robertson") return FamilyTag::robertson;
  throw RangeError("unknown family: " + std::string(name));
}

std::string describe(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const Spirallike& s) {
                          return "spirallike(alpha=" + format_param(s.alpha) + ", beta=" + format_param(s.beta) + ")";
                        },
                        [](const Ozaki& o) { return "ozaki(nu=" + format_param(o.nu) + ")"; },
                        [](const Robertson& r) { return "robertson(lambda=" + format_param(r.lambda) + ")"; },
                    },
                    spec);
}

void validate(const FamilySpec& spec) {
  std::visit(Overloaded{
                 [](const Spirallike& s) {
                   if (!(s.alpha >= 0.0 && s.alpha < 1.0))
                     throw RangeError("spirallike: alpha must satisfy 0 <= alpha < 1");
                   if (!(std::abs(s.beta) < std::numbers::pi / 2))
                     throw RangeError("spirallike: beta must satisfy -pi/2 < beta < pi/2");
                 },
                 [](const Ozaki& o) {
                   if (!(o.nu > 0.0 && o.nu <= 1.0)) throw RangeError("ozaki: nu must satisfy 0 < nu <= 1");
                 },
                 [](const Robertson& r) {
                   if (!(r.lambda >= 0.5 && r.lambda <= 1.0))
                     throw RangeError("robertson: lambda must satisfy 1/2 <= lambda <= 1");
                 },
             },
             spec);
}

CoeffTriple coeffs_closed_form(const FamilySpec& spec, const CTriple& c) {
  validate(spec);
  const Complex c1 = c.c1, c2 = c.c2, c3 = c.c3;
  return std::visit(
      Overloaded{
          [&](const Spirallike& s) {
            const Complex w = spiral_weight(s);
            return CoeffTriple{
                w * c1,
                (w * w * c1 * c1 + w * c2) / 2.0,
                (w * w * w * c1 * c1 * c1 + 3.0 * w * w * c1 * c2 + 2.0 * w * c3) / 6.0,
            };
          },
          [&](const Ozaki& o) {
            const double nu = o.nu;
            return CoeffTriple{
                -nu * c1 / 4.0,
                nu * (nu * c1 * c1 - 2.0 * c2) / 24.0,
                nu * (6.0 * nu * c1 * c2 - 8.0 * c3 - nu * nu * c1 * c1 * c1) / 192.0,
            };
          },
          [&](const Robertson& r) {
            const double k = robertson_k(r);
            return CoeffTriple{
                k * c1 / 4.0,
                k * (2.0 * c2 + k * c1 * c1) / 24.0,
                k * (8.0 * c3 + 6.0 * k * c1 * c2 + k * k * c1 * c1 * c1) / 192.0,
            };
          },
      },
      spec);
}

CoeffTriple coeffs_ode_oracle(const FamilySpec& spec, const PowerSeries& p) {
  validate(spec);
  if (std::abs(p[0] - 1.0) > kUnitTolerance) throw BranchError("coeffs_ode_oracle: p(0) must be 1");
  if (p.order() < 3) throw RangeError("coeffs_ode_oracle: p must have order >= 3");

  return std::visit(
      Overloaded{
          [&](const Spirallike& s) {
            // z f' = q f with f = sum_{n>=1} a_n z^n, a_1 = 1:
            //   (n - q_0) a_n = sum_{k=1}^{n-1} q_k a_{n-k}
            const Complex rot = std::polar(1.0, s.beta);
            const double cb = std::cos(s.beta);
            Complex q[4];
            q[0] = rot * (((1.0 - s.alpha) * p[0] + s.alpha) * cb - Complex(0.0, std::sin(s.beta)));
            for (int k = 1; k <= 3; ++k) q[k] = rot * (1.0 - s.alpha) * cb * p[k];
            Complex a[5] = {0.0, 1.0, 0.0, 0.0, 0.0};
            for (int n = 2; n <= 4; ++n) {
              Complex acc{};
              for (int k = 1; k <= n - 1; ++k) acc += q[k] * a[n - k];
              a[n] = acc / (static_cast<double>(n) - q[0]);
            }
            return CoeffTriple{a[2], a[3], a[4]};
          },
          [&](const Ozaki& o) {
            // h = f': 2 m h_m = -nu sum_{k=1}^{m} p_k h_{m-k}
            Complex h[4] = {1.0, 0.0, 0.0, 0.0};
            for (int m = 1; m <= 3; ++m) {
              Complex acc{};
              for (int k = 1; k <= m; ++k) acc += p[k] * h[m - k];
              h[m] = -o.nu * acc / (2.0 * m);
            }
            return from_derivative(h);
          },
          [&](const Robertson& r) {
            // h = f': m h_m = ((2 lambda + 1)/2) sum_{k=1}^{m} p_k h_{m-k}
            const double kappa = robertson_k(r) / 2.0;
            Complex h[4] = {1.0, 0.0, 0.0, 0.0};
            for (int m = 1; m <= 3; ++m) {
              Complex acc{};
              for (int k = 1; k <= m; ++k) acc += p[k] * h[m - k];
              h[m] = kappa * acc / static_cast<double>(m);
            }
            return from_derivative(h);
          },
      },
      spec);
}

double s_critical(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const Spirallike&) -> double {
                          throw std::invalid_argument("s_critical: not applicable to the spirallike family");
                        },
                        [](const Ozaki& o) {
                          const double nu = o.nu;
                          return std::sqrt(2.0 * (nu - 2.0) / (nu * nu + 8.0 * nu - 32.0));
                        },
                        [](const Robertson& r) {
                          const double l = r.lambda;
                          return std::sqrt(-2.0 * (2.0 * l + 3.0) / (4.0 * l * l - 12.0 * l - 39.0));
                        },
                    },
                    spec);
}

CoeffTriple extremal_coeffs(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const Spirallike& s) {
                          // f1(z) = z (1 - z^2)^{-w}; no printed a4, so expand.
                          PowerSeries base = PowerSeries::constant(1.0);
                          base[2] = -1.0;
                          const PowerSeries g = pow_complex(base, -spiral_weight(s));
                          return CoeffTriple{g[1], g[2], g[3]};
                        },
                        [&spec](const Ozaki& o) {
                          const double nu = o.nu;
                          const double s = s_critical(spec);
                          return CoeffTriple{
                              -nu * s / 2.0,
                              nu * (1.0 + (nu - 2.0) * s * s) / 6.0,
                              -nu * (nu - 2.0) * s * (3.0 + (nu - 4.0) * s * s) / 24.0,
                          };
                        },
                        [&spec](const Robertson& r) {
                          const double k = robertson_k(r);
                          const double l = r.lambda;
                          const double s = s_critical(spec);
                          return CoeffTriple{
                              k * s / 2.0,
                              k * ((3.0 + 2.0 * l) * s * s - 1.0) / 6.0,
                              k * (2.0 * l + 3.0) * ((2.0 * l + 5.0) * s * s - 3.0) * s / 24.0,
                          };
                        },
                    },
                    spec);
}

double sharp_bound(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const Spirallike& s) {
                          const double cb = std::cos(s.beta);
                          return (1.0 - s.alpha) * (1.0 - s.alpha) * cb * cb / 4.0;
                        },
                        [](const Ozaki& o) {
                          const double nu = o.nu;
                          return nu * nu * (nu * nu + 12.0 * nu - 44.0) / (192.0 * (nu * nu + 8.0 * nu - 32.0));
                        },
                        [](const Robertson& r) {
                          const double l = r.lambda;
                          const double k = 2.0 * l + 1.0;
                          return k * k * (12.0 * l * l - 60.0 * l - 165.0) / (576.0 * (4.0 * l * l - 12.0 * l - 39.0));
                        },
                    },
                    spec);
}

RationalFunction extremal_generator(const FamilySpec& spec) {
  validate(spec);
  if (std::holds_alternative<Spirallike>(spec)) return RationalFunction({1.0, 0.0, 1.0}, {1.0, 0.0, -1.0});
  const double s = s_critical(spec);
  return RationalFunction({1.0, 0.0, -1.0}, {1.0, -2.0 * s, 1.0});
}

double extremal_membership_margin(const FamilySpec& spec, double radius, int samples) {
  validate(spec);
  if (!(radius > 0.0 && radius < 1.0)) throw RangeError("membership: radius must lie in (0, 1)");
  if (samples <= 0) throw RangeError("membership: samples must be positive");
  const RationalFunction p = extremal_generator(spec);
  double margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const Complex z = std::polar(radius, 2.0 * std::numbers::pi * k / samples);
    const double m = std::visit(
        Overloaded{
            [&](const Spirallike& s) {
              // z f1'/f1 = 1 + 2 w z^2 / (1 - z^2)
              const Complex zf_over_f = 1.0 + 2.0 * spiral_weight(s) * z * z / (1.0 - z * z);
              return (std::polar(1.0, -s.beta) * zf_over_f).real() - s.alpha * std::cos(s.beta);
            },
            [&](const Ozaki& o) {
              const Complex convexity = 1.0 - o.nu / 2.0 * (p.evaluate(z) - 1.0);  // 1 + z f''/f'
              return 1.0 + o.nu / 2.0 - convexity.real();
            },
            [&](const Robertson& r) {
              const Complex convexity = 1.0 + robertson_k(r) / 2.0 * (p.evaluate(z) - 1.0);
              return convexity.real() - (0.5 - r.lambda);
            },
        },
        spec);
    margin = std::min(margin, m);
  }
  return margin;
}

}  // namespace loghankel
