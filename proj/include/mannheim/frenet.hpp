#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "mannheim/curve.hpp"
#include "mannheim/scalar_function.hpp"

namespace mannheim {

enum class FrameKind { TimelikeCurve, SpacelikeEpsPlus, SpacelikeEpsMinus };

inline const char* to_string(FrameKind k) {
  switch (k) {
    case FrameKind::TimelikeCurve: return "timelike";
    case FrameKind::SpacelikeEpsPlus: return "spacelike+";
    case FrameKind::SpacelikeEpsMinus: return "spacelike-";
  }
  return "?";
}

/// Expected self inner products <T,T>, <N,N>, <B,B> for a frame kind.
inline std::array<double, 3> frame_signature(FrameKind k) {
  switch (k) {
    case FrameKind::TimelikeCurve: return {-1.0, 1.0, 1.0};
    case FrameKind::SpacelikeEpsPlus: return {1.0, 1.0, -1.0};
    case FrameKind::SpacelikeEpsMinus: return {1.0, -1.0, 1.0};
  }
  return {0.0, 0.0, 0.0};
}

struct FrenetFrame {
  Vec3L T, N, B;
  double kappa = 0.0;
  double tau = 0.0;
  FrameKind kind = FrameKind::TimelikeCurve;

  /// Sign of <N,N>; the spacelike-curve discriminant.
  double epsilon() const { return kind == FrameKind::SpacelikeEpsMinus ? -1.0 : 1.0; }
};

struct FrenetTolerances {
  double curvature = 1e-9;
  /// Relative: T' counts as null when |<T',T'>| <= null_normal * |T'|_E^2.
  double null_normal = 1e-10;
  double unit_speed = 1e-6;
};

/// Largest deviation of the frame from its kind's Gram matrix and from
/// B = T ^ N (componentwise).
inline double gram_defect(const Vec3L& T, const Vec3L& N, const Vec3L& B, FrameKind kind) {
  const auto sig = frame_signature(kind);
  double d = 0.0;
  d = std::max(d, std::abs(inner(T, T) - sig[0]));
  d = std::max(d, std::abs(inner(N, N) - sig[1]));
  d = std::max(d, std::abs(inner(B, B) - sig[2]));
  d = std::max(d, std::abs(inner(T, N)));
  d = std::max(d, std::abs(inner(T, B)));
  d = std::max(d, std::abs(inner(N, B)));
  d = std::max(d, max_abs_component(B - cross(T, N)));
  return d;
}

inline double gram_defect(const FrenetFrame& f) { return gram_defect(f.T, f.N, f.B, f.kind); }

/// Orthonormal frame at the origin of each kind.
inline FrenetFrame standard_frame(FrameKind kind, double kappa = 1.0, double tau = 0.0) {
  FrenetFrame f;
  f.kind = kind;
  f.kappa = kappa;
  f.tau = tau;
  switch (kind) {
    case FrameKind::TimelikeCurve: f.T = e1; f.N = e2; break;
    case FrameKind::SpacelikeEpsPlus: f.T = e2; f.N = e3; break;
    case FrameKind::SpacelikeEpsMinus: f.T = e2; f.N = e1; break;
  }
  f.B = cross(f.T, f.N);
  return f;
}

/// Local expansions of the Frenet apparatus. T, N, B, kappa and tau carry
/// `order` Taylor coefficients each.
struct FrenetSeries {
  VecSeries T, N, B;
  Series kappa, tau;
  FrameKind kind;

  FrenetFrame at_point() const { return {T[0], N[0], B[0], kappa[0], tau[0], kind}; }
};

inline FrenetSeries frenet_series(const Curve& c, double s, int order,
                                  const FrenetTolerances& tol = {}) {
  const VecSeries a = c.taylor(s, order + 3);
  const VecSeries T = a.derivative();
  const double tt = inner(T[0], T[0]);
  if (std::abs(std::abs(tt) - 1.0) > tol.unit_speed) {
    fail(ErrorCode::NotUnitSpeed, c.label() + " is not unit-speed at s = " + std::to_string(s),
         std::abs(std::abs(tt) - 1.0));
  }
  const VecSeries Tp = T.derivative();
  const double euclid = euclidean_norm(Tp[0]);
  if (euclid <= tol.curvature) {
    fail(ErrorCode::VanishingCurvature, "vanishing curvature at s = " + std::to_string(s), euclid);
  }
  const Series q = inner(Tp, Tp);
  if (std::abs(q[0]) <= tol.null_normal * euclid * euclid) {
    fail(ErrorCode::NullPrincipalNormal, "null principal normal at s = " + std::to_string(s), q[0]);
  }
  const Series kappa = sqrt_abs(q);
  if (kappa[0] <= tol.curvature) {
    fail(ErrorCode::VanishingCurvature, "vanishing curvature at s = " + std::to_string(s),
         kappa[0]);
  }
  FrameKind kind = FrameKind::TimelikeCurve;
  if (tt > 0.0) kind = q[0] > 0.0 ? FrameKind::SpacelikeEpsPlus : FrameKind::SpacelikeEpsMinus;

  const VecSeries N = Tp / kappa;
  const VecSeries B = cross(T.truncated(N.order()), N);
  const Series nb = inner(N.derivative(), B.truncated(N.order() - 1));
  Series tau = nb;
  if (kind == FrameKind::SpacelikeEpsPlus) tau *= -1.0;

  FrenetSeries r{T.truncated(order), N.truncated(order), B.truncated(order),
                 kappa.truncated(order), tau.truncated(order), kind};
  return r;
}

/// Frame, curvature, torsion and kind of a unit-speed curve at s.
inline FrenetFrame frenet_apparatus(const Curve& c, double s, const FrenetTolerances& tol = {}) {
  return frenet_series(c, s, 0, tol).at_point();
}

/// Common frame kind over a uniform grid; MixedCausalCharacter if it changes.
inline FrameKind curve_frame_kind(const Curve& c, int grid_size, const FrenetTolerances& tol = {}) {
  const Interval d = c.domain();
  const auto grid = uniform_grid(d.lo, d.hi, grid_size);
  const FrameKind kind = frenet_apparatus(c, grid.front(), tol).kind;
  for (double s : grid) {
    if (frenet_apparatus(c, s, tol).kind != kind) {
      fail(ErrorCode::MixedCausalCharacter, "frame kind changes along " + c.label());
    }
  }
  return kind;
}

/// Largest Euclidean defect of the three Frenet equations at s, using the
/// extracted scalars.
inline double frenet_equation_residual(const Curve& c, double s) {
  const FrenetSeries f = frenet_series(c, s, 1);
  const double k = f.kappa[0];
  const double t = f.tau[0];
  const Vec3L Tp = f.T.derivative_value(1);
  const Vec3L Np = f.N.derivative_value(1);
  const Vec3L Bp = f.B.derivative_value(1);
  Vec3L n_rhs, b_rhs;
  if (f.kind == FrameKind::TimelikeCurve) {
    n_rhs = k * f.T[0] + t * f.B[0];
    b_rhs = -t * f.N[0];
  } else {
    const double eps = f.at_point().epsilon();
    n_rhs = -eps * k * f.T[0] + t * f.B[0];
    b_rhs = t * f.N[0];
  }
  return std::max({euclidean_norm(Tp - k * f.N[0]), euclidean_norm(Np - n_rhs),
                   euclidean_norm(Bp - b_rhs)});
}

struct FrenetState {
  Vec3L p, T, N, B;
};

/// Fixed-step RK4 solution of {p' = T} plus the Frenet system of one kind.
/// Between nodes the state comes from a single RK4 step off the nearest
/// node at or below; higher derivatives come from the Taylor recursion of
/// the (linear) system, so extracted curvature and torsion are not subject
/// to differencing noise.
class FrenetTrajectory {
 public:
  FrenetTrajectory(FrameKind kind, ScalarFunction kappa, ScalarFunction tau, FrenetState start,
                   Interval range, double step)
      : kind_(kind), kappa_(std::move(kappa)), tau_(std::move(tau)), range_(range) {
    if (!(step > 0.0) || !std::isfinite(step)) fail(ErrorCode::InvalidArgument, "step must be > 0");
    if (!(range.hi > range.lo)) fail(ErrorCode::InvalidArgument, "empty synthesis range");
    const int n = std::max(1, static_cast<int>(std::ceil(range.length() / step - 1e-9)));
    h_ = range.length() / n;
    steps_ = static_cast<std::size_t>(n);
    nodes_.reserve(steps_ + 1);
    nodes_.push_back(start);
    for (int i = 0; i < n; ++i) nodes_.push_back(rk4(node_parameter(i), nodes_.back(), h_));
  }

  FrameKind kind() const { return kind_; }
  Interval range() const { return range_; }
  double node_step() const { return h_; }
  std::size_t node_count() const { return nodes_.size(); }
  double node_parameter(std::size_t i) const {
    return i == steps_ ? range_.hi : range_.lo + h_ * static_cast<double>(i);
  }
  const FrenetState& node(std::size_t i) const { return nodes_[i]; }

  FrenetState state(double s) const {
    s = range_.clamp(s);
    std::size_t i = static_cast<std::size_t>(std::floor((s - range_.lo) / h_));
    i = std::min(i, nodes_.size() - 1);
    const double dt = s - node_parameter(i);
    if (dt == 0.0) return nodes_[i];
    return rk4(node_parameter(i), nodes_[i], dt);
  }

  /// Taylor expansion of the position about s.
  VecSeries position_series(double s, int order) const {
    const FrenetState x = state(s);
    const int m = std::max(order - 1, 0);
    const Series k = kappa_.series(s, m);
    const Series t = tau_.series(s, m);
    VecSeries T(m), N(m), B(m);
    T[0] = x.T;
    N[0] = x.N;
    B[0] = x.B;
    const double eps = kind_ == FrameKind::SpacelikeEpsMinus ? -1.0 : 1.0;
    for (int j = 0; j < m; ++j) {
      Vec3L kN, kT, tB, tN;
      for (int i = 0; i <= j; ++i) {
        kN += k[i] * N[j - i];
        kT += k[i] * T[j - i];
        tB += t[i] * B[j - i];
        tN += t[i] * N[j - i];
      }
      const double inv = 1.0 / (j + 1);
      T[j + 1] = kN * inv;
      if (kind_ == FrameKind::TimelikeCurve) {
        N[j + 1] = (kT + tB) * inv;
        B[j + 1] = -tN * inv;
      } else {
        N[j + 1] = (-eps * kT + tB) * inv;
        B[j + 1] = tN * inv;
      }
    }
    VecSeries p(order);
    p[0] = x.p;
    for (int j = 0; j < order; ++j) p[j + 1] = T[j] / (j + 1);
    return p;
  }

  /// Largest Gram defect over the integration nodes.
  double max_gram_drift() const {
    double d = 0.0;
    for (const auto& x : nodes_) d = std::max(d, gram_defect(x.T, x.N, x.B, kind_));
    return d;
  }

 private:
  FrenetState derivative(double s, const FrenetState& x) const {
    const double k = kappa_(s);
    const double t = tau_(s);
    if (kind_ == FrameKind::TimelikeCurve) return {x.T, k * x.N, k * x.T + t * x.B, -t * x.N};
    const double eps = kind_ == FrameKind::SpacelikeEpsMinus ? -1.0 : 1.0;
    return {x.T, k * x.N, -eps * k * x.T + t * x.B, t * x.N};
  }

  static FrenetState axpy(const FrenetState& x, double a, const FrenetState& d) {
    return {x.p + a * d.p, x.T + a * d.T, x.N + a * d.N, x.B + a * d.B};
  }

  FrenetState rk4(double s, const FrenetState& x, double h) const {
    const FrenetState k1 = derivative(s, x);
    const FrenetState k2 = derivative(s + 0.5 * h, axpy(x, 0.5 * h, k1));
    const FrenetState k3 = derivative(s + 0.5 * h, axpy(x, 0.5 * h, k2));
    const FrenetState k4 = derivative(s + h, axpy(x, h, k3));
    const double w = h / 6.0;
    return {x.p + w * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p),
            x.T + w * (k1.T + 2.0 * k2.T + 2.0 * k3.T + k4.T),
            x.N + w * (k1.N + 2.0 * k2.N + 2.0 * k3.N + k4.N),
            x.B + w * (k1.B + 2.0 * k2.B + 2.0 * k3.B + k4.B)};
  }

  FrameKind kind_;
  ScalarFunction kappa_, tau_;
  Interval range_;
  double h_ = 0.0;
  std::size_t steps_ = 0;
  std::vector<FrenetState> nodes_;
};

inline constexpr double kInitialFrameTolerance = 1e-10;

struct Synthesis {
  Curve curve;
  std::shared_ptr<const FrenetTrajectory> trajectory;
};

/// Integrates the Frenet system from frame0 at s_range.lo. The returned curve
/// is unit-speed by construction and parametrized by s over s_range.
inline Synthesis frenet_synthesize_detailed(FrameKind kind, ScalarFunction kappa,
                                            ScalarFunction tau, const FrenetFrame& frame0,
                                            Vec3L p0, Interval s_range, double step,
                                            std::string label = "synthesized") {
  const double defect = gram_defect(frame0.T, frame0.N, frame0.B, kind);
  if (!(defect <= kInitialFrameTolerance)) {
    fail(ErrorCode::InvalidInitialFrame,
         std::string("initial frame violates the ") + to_string(kind) + " Gram invariants", defect);
  }
  // Curvature must stay positive wherever the integrator samples it.
  const int checks = std::max(2, static_cast<int>(std::ceil(s_range.length() / step)) * 2 + 1);
  for (double s : uniform_grid(s_range.lo, s_range.hi, checks)) {
    const double k = kappa(s);
    if (!(k > 0.0)) fail(ErrorCode::NonPositiveCurvature, "curvature must be > 0", k);
    if (!std::isfinite(tau(s))) fail(ErrorCode::NonFinite, "non-finite torsion", tau(s));
  }
  auto traj = std::make_shared<const FrenetTrajectory>(
      kind, std::move(kappa), std::move(tau), FrenetState{p0, frame0.T, frame0.N, frame0.B},
      s_range, step);
  auto jet = [traj](double s, int order) { return traj->position_series(s, order); };
  auto position = [traj](double s) { return traj->state(s).p; };
  Curve c = Curve::from_jet(std::move(label), s_range, jet, position).flagged_unit_speed();
  return {std::move(c), std::move(traj)};
}

inline Curve frenet_synthesize(FrameKind kind, ScalarFunction kappa, ScalarFunction tau,
                               const FrenetFrame& frame0, Vec3L p0, Interval s_range,
                               double step) {
  return frenet_synthesize_detailed(kind, std::move(kappa), std::move(tau), frame0, p0, s_range,
                                    step)
      .curve;
}

}  // namespace mannheim
