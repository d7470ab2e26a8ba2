#pragma once

// Curves whose coordinates are finite sums of sin, cos, sinh, cosh, linear
// and constant terms. Their Taylor expansions are exact to any order, which
// is what the built-in reference curves rely on.

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mannheim/curve.hpp"

namespace mannheim {

enum class Basis { Constant, Linear, Sin, Cos, Sinh, Cosh };

/// amplitude * basis(rate * t)
struct Term {
  Basis basis;
  double amplitude = 1.0;
  double rate = 1.0;
};

using ComponentTerms = std::vector<Term>;

namespace detail {
inline double term_derivative(const Term& term, double t, int k) {
  const double x = term.rate * t;
  const double rk = std::pow(term.rate, k);
  switch (term.basis) {
    case Basis::Constant: return k == 0 ? term.amplitude : 0.0;
    case Basis::Linear:
      return k == 0 ? term.amplitude * x : (k == 1 ? term.amplitude * term.rate : 0.0);
    case Basis::Sin: return term.amplitude * rk * std::sin(x + k * std::numbers::pi / 2);
    case Basis::Cos: return term.amplitude * rk * std::cos(x + k * std::numbers::pi / 2);
    case Basis::Sinh: return term.amplitude * rk * (k % 2 == 0 ? std::sinh(x) : std::cosh(x));
    case Basis::Cosh: return term.amplitude * rk * (k % 2 == 0 ? std::cosh(x) : std::sinh(x));
  }
  return 0.0;
}

inline double component_value(const ComponentTerms& terms, double t) {
  double acc = 0.0;
  for (const auto& term : terms) acc += term_derivative(term, t, 0);
  return acc;
}
}  // namespace detail

/// Exact sin/cos of integer multiples of pi/2 matter for the reference
/// curves: sin(x + k pi/2) picks up rounding, so Sin/Cos terms use the
/// quadrant rule instead.
inline Curve closed_form_curve(std::string label, Interval domain,
                               std::array<ComponentTerms, 3> components) {
  auto jet = [components](double t, int order) {
    VecSeries r(order);
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
      if (k > 0) fact *= k;
      Vec3L d;
      for (int i = 0; i < 3; ++i) {
        double acc = 0.0;
        for (const auto& term : components[static_cast<std::size_t>(i)]) {
          if (term.basis == Basis::Sin || term.basis == Basis::Cos) {
            const double x = term.rate * t;
            const double rk = std::pow(term.rate, k);
            // d^k sin = sin, cos, -sin, -cos; d^k cos = cos, -sin, -cos, sin
            const int q = (k + (term.basis == Basis::Cos ? 1 : 0)) % 4;
            const double v = q == 0 ? std::sin(x) : q == 1 ? std::cos(x)
                           : q == 2 ? -std::sin(x) : -std::cos(x);
            acc += term.amplitude * rk * v;
          } else {
            acc += detail::term_derivative(term, t, k);
          }
        }
        d[i] = acc;
      }
      r[k] = d / fact;
    }
    return r;
  };
  auto position = [components](double t) {
    return Vec3L{detail::component_value(components[0], t),
                 detail::component_value(components[1], t),
                 detail::component_value(components[2], t)};
  };
  return Curve::from_jet(std::move(label), domain, jet, position);
}

/// Spacelike reference curve (-sinh(s)/2, cosh(s)/2, sqrt(5) s / 2), unit
/// speed with spacelike normal and timelike binormal.
inline Curve paper_example_1(Interval domain = {0.0, 1.0}) {
  const double r5 = std::sqrt(5.0);
  return closed_form_curve("paper-example-1", domain,
                           {ComponentTerms{{Basis::Sinh, -0.5, 1.0}},
                            ComponentTerms{{Basis::Cosh, 0.5, 1.0}},
                            ComponentTerms{{Basis::Linear, r5 / 2.0, 1.0}}})
      .flagged_unit_speed();
}

/// Timelike reference curve (2 sinh(s), 2 cosh(s), sqrt(3) s), unit speed.
inline Curve paper_example_2(Interval domain = {0.0, 1.0}) {
  return closed_form_curve("paper-example-2", domain,
                           {ComponentTerms{{Basis::Sinh, 2.0, 1.0}},
                            ComponentTerms{{Basis::Cosh, 2.0, 1.0}},
                            ComponentTerms{{Basis::Linear, std::sqrt(3.0), 1.0}}})
      .flagged_unit_speed();
}

/// Straight line p + t v.
inline Curve straight_line(std::string label, Vec3L p, Vec3L v, Interval domain = {0.0, 1.0}) {
  return closed_form_curve(std::move(label), domain,
                           {ComponentTerms{{Basis::Constant, p.x1}, {Basis::Linear, v.x1}},
                            ComponentTerms{{Basis::Constant, p.x2}, {Basis::Linear, v.x2}},
                            ComponentTerms{{Basis::Constant, p.x3}, {Basis::Linear, v.x3}}});
}

}  // namespace mannheim
