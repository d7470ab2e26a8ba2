#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string_view>

#include "mannheim/error.hpp"

namespace mannheim {

/// A vector of Minkowski 3-space with metric signature (-,+,+); x1 is the
/// time-like coordinate.
struct Vec3L {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Vec3L() = default;
  constexpr Vec3L(double a, double b, double c) : x1(a), x2(b), x3(c) {}

  constexpr double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  constexpr double& operator[](int i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  constexpr Vec3L& operator+=(const Vec3L& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr Vec3L& operator-=(const Vec3L& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr Vec3L& operator*=(double s) {
    x1 *= s;
    x2 *= s;
    x3 *= s;
    return *this;
  }
  constexpr Vec3L& operator/=(double s) {
    x1 /= s;
    x2 /= s;
    x3 /= s;
    return *this;
  }

  friend constexpr Vec3L operator+(Vec3L a, const Vec3L& b) { return a += b; }
  friend constexpr Vec3L operator-(Vec3L a, const Vec3L& b) { return a -= b; }
  friend constexpr Vec3L operator-(const Vec3L& a) { return {-a.x1, -a.x2, -a.x3}; }
  friend constexpr Vec3L operator*(Vec3L a, double s) { return a *= s; }
  friend constexpr Vec3L operator*(double s, Vec3L a) { return a *= s; }
  friend constexpr Vec3L operator/(Vec3L a, double s) { return a /= s; }
  friend constexpr bool operator==(const Vec3L&, const Vec3L&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Vec3L& v) {
  return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ')';
}

inline constexpr Vec3L e1{1.0, 0.0, 0.0};
inline constexpr Vec3L e2{0.0, 1.0, 0.0};
inline constexpr Vec3L e3{0.0, 0.0, 1.0};

inline bool is_finite(const Vec3L& v) {
  return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

/// Lorentzian inner product -u1 v1 + u2 v2 + u3 v3.
constexpr double inner(const Vec3L& u, const Vec3L& v) {
  return -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3;
}

/// Lorentzian vector product. With this sign pattern e2^e3 = e1,
/// e1^e2 = -e3, e3^e1 = -e2 and <u^v, w> = -det(u, v, w).
constexpr Vec3L cross(const Vec3L& u, const Vec3L& v) {
  return {u.x2 * v.x3 - u.x3 * v.x2, u.x1 * v.x3 - u.x3 * v.x1, u.x2 * v.x1 - u.x1 * v.x2};
}

/// Pseudo-norm |<v,v>|^(1/2); zero for null vectors.
inline double norm(const Vec3L& v) { return std::sqrt(std::abs(inner(v, v))); }

/// Plain Euclidean length, used for scale estimates only.
inline double euclidean_norm(const Vec3L& v) {
  return std::sqrt(v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3);
}

inline double max_abs_component(const Vec3L& v) {
  return std::max({std::abs(v.x1), std::abs(v.x2), std::abs(v.x3)});
}

enum class CausalCharacter { Timelike, Spacelike, Null, Zero };

constexpr std::string_view to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Null: return "null";
    case CausalCharacter::Zero: return "zero";
  }
  return "unknown";
}

inline constexpr double kDefaultNullTolerance = 1e-12;

/// Classifies by the sign of <v,v>; values within `null_tolerance` of zero
/// count as null.
inline CausalCharacter causal_character(const Vec3L& v,
                                        double null_tolerance = kDefaultNullTolerance) {
  if (v.x1 == 0.0 && v.x2 == 0.0 && v.x3 == 0.0) return CausalCharacter::Zero;
  const double q = inner(v, v);
  if (std::abs(q) <= null_tolerance) return CausalCharacter::Null;
  return q < 0.0 ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
}

/// Sign of <v,v> as +1 / -1 (null vectors report +1).
inline int metric_sign(const Vec3L& v) { return inner(v, v) < 0.0 ? -1 : 1; }

/// Future pointing means a positive time coordinate.
inline bool future_pointing(const Vec3L& v) { return v.x1 > 0.0; }

enum class AngleKind { Hyperbolic, Central, Spacelike, LorentzianTimelike };

constexpr std::string_view to_string(AngleKind k) {
  switch (k) {
    case AngleKind::Hyperbolic: return "hyperbolic";
    case AngleKind::Central: return "central";
    case AngleKind::Spacelike: return "spacelike";
    case AngleKind::LorentzianTimelike: return "lorentzian-timelike";
  }
  return "unknown";
}

struct LorentzAngle {
  AngleKind kind;
  double theta;  // >= 0
};

/// Angle between two non-null vectors, dispatched on their causal characters
/// and, for two spacelike vectors, on the character of the plane they span.
/// Only magnitudes are returned; signed angles come from frame decompositions.
inline LorentzAngle angle_between(const Vec3L& u, const Vec3L& v,
                                  double null_tolerance = kDefaultNullTolerance) {
  const auto cu = causal_character(u, null_tolerance);
  const auto cv = causal_character(v, null_tolerance);
  if (cu == CausalCharacter::Null || cu == CausalCharacter::Zero ||
      cv == CausalCharacter::Null || cv == CausalCharacter::Zero) {
    fail(ErrorCode::NullInput, "angle_between needs two non-null, nonzero vectors");
  }
  const double uv = inner(u, v);
  const double nn = norm(u) * norm(v);

  if (cu == CausalCharacter::Timelike && cv == CausalCharacter::Timelike) {
    if (future_pointing(u) != future_pointing(v)) {
      fail(ErrorCode::OrientationMismatch, "timelike vectors point to opposite time cones");
    }
    return {AngleKind::Hyperbolic, std::acosh(std::max(1.0, -uv / nn))};
  }
  if (cu == CausalCharacter::Spacelike && cv == CausalCharacter::Spacelike) {
    const double gram = uv * uv - inner(u, u) * inner(v, v);
    if (gram > 0.0) {
      return {AngleKind::Central, std::acosh(std::max(1.0, std::abs(uv) / nn))};
    }
    return {AngleKind::Spacelike, std::acos(std::clamp(uv / nn, -1.0, 1.0))};
  }
  return {AngleKind::LorentzianTimelike, std::asinh(std::abs(uv) / nn)};
}

}  // namespace mannheim
