#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mannheim/frenet.hpp"
#include "mannheim/identities.hpp"
#include "mannheim/reparametrize.hpp"
#include "mannheim/report.hpp"

namespace mannheim {

namespace detail {
inline void check_lambda(double lambda) {
  if (lambda == 0.0 || !std::isfinite(lambda)) {
    fail(ErrorCode::ZeroLambda, "offset constant must be finite and nonzero", lambda);
  }
}

// Fails early with VanishingCurvature instead of on first evaluation.
inline void probe_frames(const Curve& c, int n = 9) {
  const Interval d = c.domain();
  for (double t : uniform_grid(d.lo, d.hi, n)) frenet_apparatus(c, t);
}

inline std::string format_lambda(double lambda) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", lambda);
  return buf;
}

inline Curve frame_offset(const Curve& c, double lambda, bool binormal) {
  check_lambda(lambda);
  probe_frames(c);
  const double sign = binormal ? 1.0 : -1.0;
  auto jet = [c, lambda, sign, binormal](double t, int order) {
    VecSeries a = c.taylor(t, order);
    const FrenetSeries f = frenet_series(c, t, order);
    const VecSeries& dir = binormal ? f.B : f.N;
    for (int k = 0; k <= order; ++k) a[k] += sign * lambda * dir[k];
    return a;
  };
  auto position = [c, lambda, sign, binormal](double t) {
    const FrenetFrame f = frenet_apparatus(c, t);
    return c.position(t) + sign * lambda * (binormal ? f.B : f.N);
  };
  const std::string label = std::string(binormal ? "binormal-offset(" : "normal-offset(") +
                            c.label() + ", " + format_lambda(lambda) + ")";
  return Curve::from_jet(label, c.domain(), jet, position);
}
}  // namespace detail

/// a = a* + lambda B*, on the parameter of the unit-speed curve cstar.
inline Curve offset_along_binormal(const Curve& cstar, double lambda) {
  return detail::frame_offset(cstar, lambda, true);
}

/// a* = a - lambda N, on the parameter of the unit-speed curve c.
inline Curve offset_along_normal(const Curve& c, double lambda) {
  return detail::frame_offset(c, lambda, false);
}

/// One curve of a pair on its construction parameter t together with its
/// arc-length version. `map` is empty when t already is arc length.
class PairSide {
 public:
  explicit PairSide(Curve construction, int table = kDefaultArclengthTable)
      : construction_(std::move(construction)) {
    if (construction_.unit_speed()) {
      unit_ = construction_;
    } else {
      Reparametrization r = reparametrize(construction_, table);
      unit_ = std::move(r.curve);
      map_ = std::move(r.map);
    }
  }

  const Curve& construction() const { return construction_; }
  const Curve& unit() const { return unit_; }
  double to_unit(double t) const { return map_ ? map_->arclength(t) : t; }
  double to_construction(double s) const { return map_ ? map_->source_parameter(s) : s; }
  double speed(double t) const { return map_ ? map_->speed(t) : 1.0; }

 private:
  Curve construction_;
  Curve unit_;
  std::shared_ptr<const ArcLengthMap> map_;
};

/// Corresponding points through the shared construction parameter.
struct Correspondence {
  std::shared_ptr<const PairSide> c_side;
  std::shared_ptr<const PairSide> star_side;

  double star_of(double s) const { return star_side->to_unit(c_side->to_construction(s)); }

  /// ds*/ds at s.
  double rate(double s) const {
    const double t = c_side->to_construction(s);
    return star_side->speed(t) / c_side->speed(t);
  }
};

struct MannheimPair {
  Curve c;
  Curve cstar;
  double lambda = 0.0;
  Correspondence correspondence;
  PairType type = PairType::Type1;
};

/// Type from the causal characters of C (and its N) and C* (and its B*).
inline PairType classify_kinds(FrameKind c_kind, FrameKind star_kind) {
  using K = FrameKind;
  if (star_kind == K::TimelikeCurve) {
    if (c_kind == K::SpacelikeEpsMinus) return PairType::Type1;
    if (c_kind == K::TimelikeCurve) return PairType::Type2;
  } else if (star_kind == K::SpacelikeEpsPlus) {
    if (c_kind == K::SpacelikeEpsMinus) return PairType::Type3;
    if (c_kind == K::TimelikeCurve) return PairType::Type4;
  } else if (star_kind == K::SpacelikeEpsMinus && c_kind == K::SpacelikeEpsPlus) {
    return PairType::Type5;
  }
  fail(ErrorCode::UnsupportedCombination,
       std::string("no pair type for C ") + to_string(c_kind) + " and C* " + to_string(star_kind));
}

inline PairType classify_pair(const Curve& c, const Curve& cstar, int grid = 9) {
  return classify_kinds(curve_frame_kind(c, grid), curve_frame_kind(cstar, grid));
}

/// Pair of two curves corresponded by a shared construction parameter.
/// Curves not flagged unit-speed are reparametrized by arc length.
inline MannheimPair pair_from_curves(const Curve& c, const Curve& cstar, double lambda) {
  detail::check_lambda(lambda);
  const Interval a = c.domain();
  const Interval b = cstar.domain();
  if (std::abs(a.lo - b.lo) > a.slack() || std::abs(a.hi - b.hi) > a.slack()) {
    fail(ErrorCode::InvalidArgument, "paired curves must share their parameter domain");
  }
  auto cs = std::make_shared<const PairSide>(c);
  auto ss = std::make_shared<const PairSide>(cstar);
  MannheimPair p;
  p.c = cs->unit();
  p.cstar = ss->unit();
  p.lambda = lambda;
  p.correspondence = {cs, ss};
  p.type = classify_pair(p.c, p.cstar);
  return p;
}

/// C from C* by the binormal offset.
inline MannheimPair pair_from_partner(const Curve& cstar, double lambda) {
  const Curve star = cstar.unit_speed() ? cstar : reparametrize_unit(cstar);
  return pair_from_curves(offset_along_binormal(star, lambda), star, lambda);
}

/// C* from C by the normal offset.
inline MannheimPair pair_from_curve(const Curve& c, double lambda) {
  const Curve unit = c.unit_speed() ? c : reparametrize_unit(c);
  return pair_from_curves(unit, offset_along_normal(unit, lambda), lambda);
}

/// |N ^ B*| / (|N| |B*|): zero iff the principal normal of C and the
/// binormal of C* are collinear.
inline double collinearity_residual(const Vec3L& n, const Vec3L& bstar) {
  return norm(cross(n, bstar)) / (norm(n) * norm(bstar));
}

inline double mannheim_residual(const MannheimPair& pair, double s) {
  const FrenetFrame f = frenet_apparatus(pair.c, s);
  const FrenetFrame fs = frenet_apparatus(pair.cstar, pair.correspondence.star_of(s));
  return collinearity_residual(f.N, fs.B);
}

struct CurveTestResult {
  bool constant = false;
  double lambda_estimate = 0.0;
  std::vector<double> grid;
  std::vector<double> profile;
};

inline constexpr double kVanishingTorsion = 1e-9;

/// Whether the necessary condition t^2 q / k^2 = 1/lambda^2 can hold with a
/// constant lambda; see curve_test_value.
inline CurveTestResult mannheim_curve_test(const Curve& c, PairType type, int grid) {
  const Curve unit = c.unit_speed() ? c : reparametrize_unit(c);
  const Interval d = unit.domain();
  CurveTestResult r;
  r.grid = uniform_grid(d.lo, d.hi, grid);
  for (double s : r.grid) {
    const FrenetFrame f = frenet_apparatus(unit, s);
    if (std::abs(f.tau) <= kVanishingTorsion) {
      fail(ErrorCode::VanishingTorsion, "vanishing torsion at s = " + std::to_string(s), f.tau);
    }
    const double m = curve_test_value(type, f.kappa, f.tau);
    if (!(m > 0.0)) {
      fail(ErrorCode::NegativeConditionValue,
           "no real offset constant at s = " + std::to_string(s), m);
    }
    r.profile.push_back(m);
  }
  const auto [lo, hi] = std::minmax_element(r.profile.begin(), r.profile.end());
  double mean = 0.0;
  for (double m : r.profile) mean += m;
  mean /= static_cast<double>(r.profile.size());
  r.constant = *hi - *lo <= 1e-6 * std::abs(mean);
  r.lambda_estimate = 1.0 / std::sqrt(mean);
  return r;
}

/// Signed angle of the type's decomposition of T in {T*, N*}:
///   types 1, 4:  T = b (sinh t T* + cosh t N*)
///   types 2, 3:  T = b (cosh t T* + sinh t N*)
///   type 5:      T = cos t T* + sin t N*
/// with branch b = +-1 chosen so the cosh coefficient is positive.
struct ThetaValue {
  double theta = 0.0;
  int branch = 1;
  /// cosh^2 - sinh^2 - 1 (cos^2 + sin^2 - 1) of the raw projections.
  double defect = 0.0;
  /// Euclidean size of T minus its reconstruction from theta.
  double residual = 0.0;
};

inline constexpr double kDecompositionTolerance = 1e-6;

inline ThetaValue theta_projection(PairType type, const Vec3L& T, const Vec3L& tstar,
                                   const Vec3L& nstar) {
  const double a = inner(T, tstar) / inner(tstar, tstar);
  const double b = inner(T, nstar) / inner(nstar, nstar);
  ThetaValue v;
  if (circular(type)) {
    v.theta = std::atan2(b, a);
    v.defect = a * a + b * b - 1.0;
    v.residual = euclidean_norm(T - (std::cos(v.theta) * tstar + std::sin(v.theta) * nstar));
    return v;
  }
  const bool sinh_first = type == PairType::Type1 || type == PairType::Type4;
  double sh = sinh_first ? a : b;
  double ch = sinh_first ? b : a;
  if (ch < 0.0) {
    v.branch = -1;
    sh = -sh;
    ch = -ch;
  }
  v.theta = std::asinh(sh);
  v.defect = ch * ch - sh * sh - 1.0;
  const double s = std::sinh(v.theta);
  const double c = std::cosh(v.theta);
  const Vec3L rebuilt = sinh_first ? s * tstar + c * nstar : c * tstar + s * nstar;
  v.residual = euclidean_norm(T - v.branch * rebuilt);
  return v;
}

inline ThetaValue theta_projection(const MannheimPair& pair, double s) {
  const FrenetFrame f = frenet_apparatus(pair.c, s);
  const FrenetFrame fs = frenet_apparatus(pair.cstar, pair.correspondence.star_of(s));
  return theta_projection(pair.type, f.T, fs.T, fs.N);
}

/// As theta_projection, but InconsistentDecomposition when the projections
/// are not the sinh/cosh (sin/cos) of one angle.
inline ThetaValue theta(const MannheimPair& pair, double s) {
  const ThetaValue v = theta_projection(pair, s);
  if (std::abs(v.defect) > kDecompositionTolerance) {
    fail(ErrorCode::InconsistentDecomposition,
         "T is not a " + to_string(pair.type) + " combination of T*, N* at s = " +
             std::to_string(s),
         v.defect);
  }
  return v;
}

/// Everything the verifiers need at one grid point.
struct PairPoint {
  double s = 0.0;
  double s_star = 0.0;
  double kappa = 0.0, tau = 0.0;
  double kappa_star = 0.0, tau_star = 0.0;
  ThetaValue theta;
  double dtheta = 0.0;  // d(theta)/ds*
  double rate = 1.0;    // ds*/ds
  double rate_n = 0.0;  // |N'| of C
  double rate_b = 0.0;  // |B*'| of C*
  double rho = 0.0;
  double distance = 0.0;
};

/// Pointwise data of a pair (or of hand-built frame data) on a grid.
struct PairData {
  PairType type = PairType::Type1;
  double lambda = 0.0;
  std::vector<PairPoint> points;

  std::vector<double> grid() const {
    std::vector<double> g;
    for (const auto& p : points) g.push_back(p.s);
    return g;
  }
  double max_rho() const {
    double m = 0.0;
    for (const auto& p : points) m = std::max(m, p.rho);
    return m;
  }
};

inline constexpr double kThetaStep = 1e-3;

inline PairData sample_pair(const MannheimPair& pair, int n) {
  PairData data{pair.type, pair.lambda, {}};
  const Interval d = pair.c.domain();
  const auto theta_of = [&pair](double s) { return theta_projection(pair, s).theta; };
  for (double s : uniform_grid(d.lo, d.hi, n)) {
    PairPoint p;
    p.s = s;
    p.s_star = pair.correspondence.star_of(s);
    const FrenetSeries f = frenet_series(pair.c, s, 1);
    const FrenetSeries fs = frenet_series(pair.cstar, p.s_star, 1);
    p.kappa = f.kappa[0];
    p.tau = f.tau[0];
    p.kappa_star = fs.kappa[0];
    p.tau_star = fs.tau[0];
    p.theta = theta_projection(pair.type, f.T[0], fs.T[0], fs.N[0]);
    p.rate = pair.correspondence.rate(s);
    const double h = kThetaStep * std::max(1.0, std::abs(s));
    p.dtheta = fd_derivative(theta_of, s, 1, h, d.lo, d.hi) / p.rate;
    p.rate_n = norm(f.N[1]);
    p.rate_b = norm(fs.B[1]);
    p.rho = collinearity_residual(f.N[0], fs.B[0]);
    p.distance = norm(pair.c.position(s) - pair.cstar.position(p.s_star));
    data.points.push_back(p);
  }
  return data;
}

struct VerifyOptions {
  double hypothesis = 1e-6;
  double distance = 1e-9;
  double algebraic = 1e-5;
  double derivative = 1e-4;
  double ratio_threshold = 1e-6;
  double degenerate_rate = 1e-9;
};

namespace detail {
inline bool hypothesis_met(const PairData& d, const VerifyOptions& o) {
  return d.max_rho() < o.hypothesis;
}

inline void require_consistent_theta(const PairData& d, const VerifyOptions& o) {
  if (!hypothesis_met(d, o)) return;
  for (const auto& p : d.points) {
    if (std::abs(p.theta.defect) > kDecompositionTolerance) {
      fail(ErrorCode::InconsistentDecomposition,
           "T is not a " + to_string(d.type) + " combination of T*, N* at s = " +
               std::to_string(p.s),
           p.theta.defect);
    }
  }
}

inline void annotate(VerificationReport& r, const PairData& d, const VerifyOptions& o) {
  if (!hypothesis_met(d, o)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "collinearity residual %.3g exceeds %.3g", d.max_rho(),
                  o.hypothesis);
    r.note = buf;
  }
}
}  // namespace detail

inline VerificationReport mannheim_residual_report(const PairData& d, const VerifyOptions& o = {}) {
  std::vector<double> res;
  for (const auto& p : d.points) res.push_back(p.rho);
  auto r = make_report("mannheim_residual", d.grid(), std::move(res), o.hypothesis, false);
  r.note = detail::hypothesis_met(d, o) ? "hypothesis met" : "hypothesis not met";
  return r;
}

inline VerificationReport verify_distance(const PairData& d, const VerifyOptions& o = {}) {
  std::vector<double> res;
  for (const auto& p : d.points) res.push_back(std::abs(p.distance - std::abs(d.lambda)));
  return make_report("distance", d.grid(), std::move(res), o.distance, true);
}

inline VerificationReport verify_torsion_relation(const PairData& d, const VerifyOptions& o = {}) {
  std::vector<double> res;
  for (const auto& p : d.points) {
    if (std::abs(p.tau) <= kVanishingTorsion) {
      fail(ErrorCode::VanishingTorsion, "vanishing torsion at s = " + std::to_string(p.s), p.tau);
    }
    res.push_back(torsion_relation_residual(d.type, d.lambda, p.kappa, p.tau, p.tau_star));
  }
  auto r = make_report("torsion_relation", d.grid(), std::move(res), o.algebraic,
                       detail::hypothesis_met(d, o));
  detail::annotate(r, d, o);
  return r;
}

inline VerificationReport verify_linear_relation(const PairData& d, const VerifyOptions& o = {}) {
  detail::require_consistent_theta(d, o);
  std::vector<double> res;
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& p : d.points) {
    const LinearRelation l = linear_relation(d.type, d.lambda, p.theta.theta, p.kappa, p.tau);
    res.push_back(l.residual);
    lo = std::min(lo, l.mu);
    hi = std::max(hi, l.mu);
  }
  auto r = make_report("linear_relation", d.grid(), std::move(res), o.algebraic,
                       detail::hypothesis_met(d, o));
  r.diagnostics.push_back({"mu_min", lo});
  r.diagnostics.push_back({"mu_max", hi});
  r.diagnostics.push_back({"mu_spread", hi - lo});
  detail::annotate(r, d, o);
  return r;
}

inline VerificationReport verify_frame_relations(const PairData& d, const VerifyOptions& o = {}) {
  detail::require_consistent_theta(d, o);
  std::vector<double> res;
  std::array<double, 4> worst{0.0, 0.0, 0.0, 0.0};
  for (const auto& p : d.points) {
    const auto q = frame_relation_residuals(d.type, p.theta.theta, p.dtheta, p.kappa, p.tau,
                                            p.kappa_star, p.tau_star);
    for (std::size_t i = 0; i < 4; ++i) worst[i] = std::max(worst[i], q[i]);
    res.push_back(std::max({q[0], q[1], q[2], q[3]}));
  }
  auto r = make_report("frame_relations", d.grid(), std::move(res), o.derivative,
                       detail::hypothesis_met(d, o));
  r.diagnostics.push_back({"max_kappa_star", worst[0]});
  r.diagnostics.push_back({"max_tau_star", worst[1]});
  r.diagnostics.push_back({"max_kappa", worst[2]});
  r.diagnostics.push_back({"max_tau", worst[3]});
  detail::annotate(r, d, o);
  return r;
}

inline VerificationReport verify_torsion_square(const PairData& d, const VerifyOptions& o = {}) {
  std::vector<double> res;
  double lit_max = 0.0, lit_sum = 0.0;
  for (const auto& p : d.points) {
    const TorsionSquare t = torsion_square(d.type, p.kappa, p.tau, p.tau_star);
    res.push_back(t.squared);
    lit_max = std::max(lit_max, t.literal);
    lit_sum += t.literal;
  }
  auto r = make_report("torsion_square", d.grid(), std::move(res), o.algebraic,
                       detail::hypothesis_met(d, o));
  r.diagnostics.push_back({"literal_max_residual", lit_max});
  r.diagnostics.push_back({"literal_mean_residual",
                           d.points.empty() ? 0.0 : lit_sum / static_cast<double>(d.points.size())});
  detail::annotate(r, d, o);
  return r;
}

struct CurvatureCenters {
  double c_to_m;         // |a M| = 1/k
  double cstar_to_mstar;  // |a* M*| = 1/k*
  double c_to_mstar;     // sqrt|lambda^2 - 1/k*^2|
  double cstar_to_m;     // |1/k - lambda|
  double ratio;
};

inline CurvatureCenters curvature_centers(double lambda, double kappa, double kappa_star) {
  if (!(kappa > 0.0) || !(kappa_star > 0.0)) {
    fail(ErrorCode::VanishingCurvature, "curvature centers need positive curvatures");
  }
  return {1.0 / kappa, 1.0 / kappa_star,
          std::sqrt(std::abs(lambda * lambda - 1.0 / (kappa_star * kappa_star))),
          std::abs(1.0 / kappa - lambda), curvature_center_ratio(lambda, kappa, kappa_star)};
}

inline CurvatureCenters curvature_centers(const MannheimPair& pair, double s) {
  const FrenetFrame f = frenet_apparatus(pair.c, s);
  const FrenetFrame fs = frenet_apparatus(pair.cstar, pair.correspondence.star_of(s));
  return curvature_centers(pair.lambda, f.kappa, fs.kappa);
}

/// Publishes the ratio profile as the residual list. Pass when its sample
/// standard deviation exceeds threshold * |mean|; otherwise Reported with a
/// ConstantRatio note.
inline VerificationReport verify_ratio_nonconstant(const PairData& d, const VerifyOptions& o = {}) {
  std::vector<double> ratio;
  for (const auto& p : d.points) ratio.push_back(curvature_centers(d.lambda, p.kappa, p.kappa_star).ratio);
  double mean = 0.0;
  for (double x : ratio) mean += x;
  mean /= static_cast<double>(std::max<std::size_t>(ratio.size(), 1));
  double var = 0.0;
  for (double x : ratio) var += (x - mean) * (x - mean);
  const double sd = ratio.size() > 1 ? std::sqrt(var / static_cast<double>(ratio.size() - 1)) : 0.0;
  const double threshold = o.ratio_threshold * std::abs(mean);
  auto r = make_report("curvature_center_ratio", d.grid(), std::move(ratio), threshold, false);
  r.mean_residual = mean;
  r.diagnostics.push_back({"mean", mean});
  r.diagnostics.push_back({"std", sd});
  r.diagnostics.push_back({"threshold", threshold});
  if (sd > threshold) {
    r.verdict = Verdict::Pass;
  } else {
    r.verdict = Verdict::Reported;
    r.note = "ConstantRatio";
  }
  return r;
}

}  // namespace mannheim
