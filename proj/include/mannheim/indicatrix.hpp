#pragma once

#include <cmath>
#include <string>

#include "mannheim/mannheim.hpp"

namespace mannheim {

enum class FrameField { T, N, B };
enum class SphereKind { Lorentzian, Hyperbolic };

inline const char* to_string(FrameField f) {
  switch (f) {
    case FrameField::T: return "T";
    case FrameField::N: return "N";
    case FrameField::B: return "B";
  }
  return "?";
}

inline const char* to_string(SphereKind k) {
  return k == SphereKind::Lorentzian ? "lorentzian" : "hyperbolic";
}

inline constexpr double kDegenerateRate = 1e-9;

namespace detail {
inline const VecSeries& field_of(const FrenetSeries& f, FrameField which) {
  switch (which) {
    case FrameField::T: return f.T;
    case FrameField::N: return f.N;
    case FrameField::B: return f.B;
  }
  return f.T;
}
}  // namespace detail

/// The curve traced by one unit Frenet field of a unit-speed curve, on the
/// unit sphere <x,x> = 1 or the hyperbolic sphere <x,x> = -1.
class Indicatrix {
 public:
  Indicatrix(Curve base, FrameField which, SphereKind sphere)
      : base_(std::move(base)), which_(which), sphere_(sphere) {}

  const Curve& base() const { return base_; }
  FrameField source() const { return which_; }
  SphereKind sphere() const { return sphere_; }

  Vec3L point(double s) const {
    return detail::field_of(frenet_series(base_, s, 0), which_)[0];
  }

  /// d(s_ind)/ds.
  double rate(double s) const {
    return norm(detail::field_of(frenet_series(base_, s, 1), which_)[1]);
  }

  /// Indicatrix arc length between s0 and s1.
  double arclength(double s0, double s1, double tol = kDefaultArclengthTolerance) const {
    return adaptive_simpson([this](double s) { return rate(s); }, s0, s1, tol);
  }

  /// The indicatrix as a curve on the base parameter.
  Curve as_curve() const {
    const Curve base = base_;
    const FrameField which = which_;
    auto jet = [base, which](double s, int order) {
      return detail::field_of(frenet_series(base, s, order), which);
    };
    return Curve::from_jet(std::string(to_string(which_)) + "-indicatrix(" + base_.label() + ")",
                           base_.domain(), jet);
  }

 private:
  Curve base_;
  FrameField which_;
  SphereKind sphere_;
};

inline Indicatrix indicatrix_of(const Curve& c, FrameField which, int grid = 17) {
  const FrameKind kind = curve_frame_kind(c, grid);
  const auto sig = frame_signature(kind);
  const double self = sig[static_cast<std::size_t>(which)];
  return Indicatrix(c, which, self > 0.0 ? SphereKind::Lorentzian : SphereKind::Hyperbolic);
}

/// Unit tangent of the indicatrix at s.
inline Vec3L indicatrix_tangent(const Curve& c, FrameField which, double s,
                                double tol = kDegenerateRate) {
  const Vec3L d = detail::field_of(frenet_series(c, s, 1), which)[1];
  const double r = norm(d);
  if (r <= tol) {
    fail(ErrorCode::DegenerateIndicatrix,
         std::string(to_string(which)) + "-indicatrix is degenerate at s = " + std::to_string(s), r);
  }
  return d / r;
}

/// Relations between the N-indicatrix of C and the B-indicatrix of C*. The
/// orientation of the two indicatrix tangents is a free sign; the one with
/// the smaller worst residual is used and reported as "alignment_sign".
inline VerificationReport verify_indicatrix_relations(const PairData& d,
                                                      const VerifyOptions& o = {}) {
  detail::require_consistent_theta(d, o);
  for (const auto& p : d.points) {
    if (p.rate_n <= o.degenerate_rate || p.rate_b <= o.degenerate_rate) {
      fail(ErrorCode::DegenerateIndicatrix,
           "degenerate indicatrix at s = " + std::to_string(p.s), std::min(p.rate_n, p.rate_b));
    }
  }
  std::vector<double> res[2];
  double worst[2] = {0.0, 0.0};
  double first[2] = {0.0, 0.0};
  double second[2] = {0.0, 0.0};
  for (int k = 0; k < 2; ++k) {
    const double sign = k == 0 ? 1.0 : -1.0;
    for (const auto& p : d.points) {
      const auto r = indicatrix_residuals(d.type, p.theta.theta, p.kappa, p.tau, p.tau_star,
                                          p.rate_n, p.rate_b, sign);
      res[k].push_back(std::max(r[0], r[1]));
      worst[k] = std::max(worst[k], res[k].back());
      first[k] = std::max(first[k], r[0]);
      second[k] = std::max(second[k], r[1]);
    }
  }
  const int k = worst[1] < worst[0] ? 1 : 0;
  auto r = make_report("indicatrix_relations", d.grid(), std::move(res[k]), o.derivative,
                       detail::hypothesis_met(d, o));
  r.diagnostics.push_back({"alignment_sign", k == 0 ? 1.0 : -1.0});
  r.diagnostics.push_back({"max_kappa_relation", first[k]});
  r.diagnostics.push_back({"max_tau_relation", second[k]});
  detail::annotate(r, d, o);
  return r;
}

}  // namespace mannheim
