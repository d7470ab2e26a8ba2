#pragma once

// Pointwise residuals of the curvature/torsion relations claimed for
// Mannheim pairs, one table per pair type. They take plain scalars so the
// same code checks data extracted from curves and hand-built frame data.

#include <array>
#include <cmath>
#include <string>

#include "mannheim/error.hpp"

namespace mannheim {

enum class PairType { Type1 = 1, Type2, Type3, Type4, Type5 };

inline int type_number(PairType t) { return static_cast<int>(t); }

inline std::string to_string(PairType t) { return "type" + std::to_string(type_number(t)); }

inline PairType pair_type_from_number(int n) {
  if (n < 1 || n > 5) fail(ErrorCode::InvalidArgument, "pair type must be 1..5");
  return static_cast<PairType>(n);
}

/// Type 5 uses circular functions of the angle, the others hyperbolic ones.
inline bool circular(PairType t) { return t == PairType::Type5; }

/// The pair's difference of squares: k^2 - t^2 (types 1, 4), t^2 - k^2
/// (types 2, 3) or k^2 + t^2 (type 5).
inline double square_combination(PairType type, double kappa, double tau) {
  switch (type) {
    case PairType::Type1:
    case PairType::Type4: return kappa * kappa - tau * tau;
    case PairType::Type2:
    case PairType::Type3: return tau * tau - kappa * kappa;
    case PairType::Type5: return kappa * kappa + tau * tau;
  }
  return 0.0;
}

/// tau* = -k / (lambda t) for types 1 and 4, +k / (lambda t) otherwise.
inline double torsion_relation_residual(PairType type, double lambda, double kappa, double tau,
                                        double tau_star) {
  const double rhs = kappa / (lambda * tau);
  const bool negative = type == PairType::Type1 || type == PairType::Type4;
  return std::abs(tau_star - (negative ? -rhs : rhs));
}

struct LinearRelation {
  double mu;
  double residual;
};

/// mu = lambda tanh(theta) (lambda tan(theta) for type 5) and the residual of
/// mu t +- lambda k = 1 (plus for types 1, 2, 5).
inline LinearRelation linear_relation(PairType type, double lambda, double theta, double kappa,
                                      double tau) {
  const double mu = lambda * (circular(type) ? std::tan(theta) : std::tanh(theta));
  const bool minus = type == PairType::Type3 || type == PairType::Type4;
  const double lhs = mu * tau + (minus ? -1.0 : 1.0) * lambda * kappa;
  return {mu, std::abs(lhs - 1.0)};
}

/// Residuals of the four relations (k*, t*, k, t) for the pair type, with
/// dtheta = d(theta)/ds*.
inline std::array<double, 4> frame_relation_residuals(PairType type, double theta, double dtheta,
                                                      double kappa, double tau, double kappa_star,
                                                      double tau_star) {
  const double ch = std::cosh(theta);
  const double sh = std::sinh(theta);
  switch (type) {
    case PairType::Type1:
      return {std::abs(kappa_star + dtheta), std::abs(tau_star - (kappa * ch + tau * sh)),
              std::abs(kappa - tau_star * ch), std::abs(tau + tau_star * sh)};
    case PairType::Type2:
      return {std::abs(kappa_star + dtheta), std::abs(tau_star + kappa * sh + tau * ch),
              std::abs(kappa - tau_star * sh), std::abs(tau + tau_star * ch)};
    case PairType::Type3:
      return {std::abs(kappa_star + dtheta), std::abs(tau_star - (-kappa * sh + tau * ch)),
              std::abs(kappa - tau_star * sh), std::abs(tau - tau_star * ch)};
    case PairType::Type4:
      return {std::abs(kappa_star - dtheta), std::abs(tau_star - (kappa * ch - tau * sh)),
              std::abs(kappa - tau_star * ch), std::abs(tau - tau_star * sh)};
    case PairType::Type5: {
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      return {std::abs(kappa_star + dtheta), std::abs(tau_star - (kappa * s + tau * c)),
              std::abs(kappa - tau_star * s), std::abs(tau - tau_star * c)};
    }
  }
  return {0.0, 0.0, 0.0, 0.0};
}

struct TorsionSquare {
  double squared;  // |t*^2 - combination|
  double literal;  // |t* - combination|
};

inline TorsionSquare torsion_square(PairType type, double kappa, double tau, double tau_star) {
  const double q = square_combination(type, kappa, tau);
  return {std::abs(tau_star * tau_star - q), std::abs(tau_star - q)};
}

/// Coefficients (c1, c2) of the indicatrix relations
///   k / rate_N = sign * c1 * t* / rate_B,  t / rate_N = sign * c2 * t* / rate_B.
inline std::array<double, 2> indicatrix_coefficients(PairType type, double theta) {
  const double ch = std::cosh(theta);
  const double sh = std::sinh(theta);
  switch (type) {
    case PairType::Type1: return {ch, -sh};
    case PairType::Type2:
    case PairType::Type3: return {-sh, -ch};
    case PairType::Type4: return {-ch, sh};
    case PairType::Type5: return {std::sin(theta), std::cos(theta)};
  }
  return {0.0, 0.0};
}

inline std::array<double, 2> indicatrix_residuals(PairType type, double theta, double kappa,
                                                  double tau, double tau_star, double rate_n,
                                                  double rate_b, double sign) {
  const auto c = indicatrix_coefficients(type, theta);
  return {std::abs(kappa / rate_n - sign * c[0] * tau_star / rate_b),
          std::abs(tau / rate_n - sign * c[1] * tau_star / rate_b)};
}

/// m = t^2 q / k^2 with q = square_combination; a real offset constant
/// 1/sqrt(m) exists only where m > 0.
inline double curve_test_value(PairType type, double kappa, double tau) {
  return tau * tau * square_combination(type, kappa, tau) / (kappa * kappa);
}

/// (1 - lambda k) sqrt|lambda^2 k*^2 - 1|
inline double curvature_center_ratio(double lambda, double kappa, double kappa_star) {
  return (1.0 - lambda * kappa) * std::sqrt(std::abs(lambda * lambda * kappa_star * kappa_star - 1.0));
}

}  // namespace mannheim
