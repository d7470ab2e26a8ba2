#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mannheim/lorentz.hpp"
#include "mannheim/numerics.hpp"
#include "mannheim/series.hpp"

namespace mannheim {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  double slack() const { return 1e-12 * std::max(1.0, std::abs(hi) + std::abs(lo)); }
  bool contains(double t) const { return t >= lo - slack() && t <= hi + slack(); }
  double clamp(double t) const { return std::clamp(t, lo, hi); }
};

/// Finite-difference policy for curves given by positions only. Steps are
/// relative: h_k = steps[k-1] * max(1, |t|).
struct FdOptions {
  std::array<double, 5> steps{1e-5, 2e-3, 5e-3, 1e-2, 2e-2};
  int max_order = 5;
};

/// A parametric map from a closed interval into Minkowski 3-space. Curves are
/// immutable and cheap to copy. Derivatives come either from a closed-form
/// local expansion (`from_jet`) or from fourth-order central differences of
/// the position (`from_position`), one-sided near the domain ends.
class Curve {
 public:
  using PositionFn = std::function<Vec3L(double)>;
  /// Taylor coefficients of the curve about t up to the requested order.
  using JetFn = std::function<VecSeries(double, int)>;

  Curve() = default;

  static Curve from_position(std::string label, Interval domain, PositionFn position,
                             FdOptions fd = {}) {
    auto impl = std::make_shared<Impl>();
    impl->label = std::move(label);
    impl->domain = domain;
    impl->position = std::move(position);
    impl->fd = fd;
    return Curve(std::move(impl));
  }

  static Curve from_jet(std::string label, Interval domain, JetFn jet,
                        PositionFn position = nullptr) {
    auto impl = std::make_shared<Impl>();
    impl->label = std::move(label);
    impl->domain = domain;
    if (!position) {
      position = [jet](double t) { return jet(t, 0)[0]; };
    }
    impl->position = std::move(position);
    impl->jet = std::move(jet);
    return Curve(std::move(impl));
  }

  const std::string& label() const { return impl_->label; }
  Interval domain() const { return impl_->domain; }
  bool unit_speed() const { return impl_->unit_speed; }
  bool has_closed_form() const { return static_cast<bool>(impl_->jet); }

  Vec3L position(double t) const {
    check_domain(t);
    const Vec3L p = impl_->position(impl_->domain.clamp(t));
    if (!is_finite(p)) fail(ErrorCode::NonFinite, "non-finite position on " + label());
    return p;
  }

  /// Taylor coefficients up to `order` about t.
  VecSeries taylor(double t, int order) const {
    check_domain(t);
    t = impl_->domain.clamp(t);
    VecSeries r = impl_->jet ? impl_->jet(t, order) : fd_taylor(t, order);
    for (int k = 0; k <= r.order(); ++k) {
      if (!is_finite(r[k])) fail(ErrorCode::NonFinite, "non-finite derivative on " + label());
    }
    return r;
  }

  Vec3L derivative(double t, int k) const { return taylor(t, k).derivative_value(k); }

  Curve relabeled(std::string label) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->label = std::move(label);
    return Curve(std::move(impl));
  }

  /// Marks the parameter as arc length. Callers are expected to have
  /// validated it (see `validate_unit_speed`).
  Curve flagged_unit_speed(bool flag = true) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->unit_speed = flag;
    return Curve(std::move(impl));
  }

  /// Same curve with its closed-form derivatives discarded.
  Curve finite_difference_view(FdOptions fd = {}) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->jet = nullptr;
    impl->fd = fd;
    return Curve(std::move(impl));
  }

 private:
  struct Impl {
    std::string label;
    Interval domain;
    PositionFn position;
    JetFn jet;
    FdOptions fd;
    bool unit_speed = false;
  };

  explicit Curve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  void check_domain(double t) const {
    if (!impl_->domain.contains(t)) {
      fail(ErrorCode::OutOfDomain, "parameter " + std::to_string(t) + " outside domain of " +
                                       impl_->label);
    }
  }

  VecSeries fd_taylor(double t, int order) const {
    const auto& fd = impl_->fd;
    if (order > fd.max_order) {
      fail(ErrorCode::DerivativeUnavailable,
           "finite differences provide at most order " + std::to_string(fd.max_order));
    }
    const Interval d = impl_->domain;
    VecSeries r(order);
    r[0] = impl_->position(t);
    double fact = 1.0;
    for (int k = 1; k <= order; ++k) {
      fact *= k;
      const double h = fd.steps[static_cast<std::size_t>(k - 1)] * std::max(1.0, std::abs(t));
      const auto offsets = fd_stencil(k, t, h, d.lo, d.hi);
      const auto w = fd_weights(0.0, offsets, k);
      Vec3L acc;
      for (std::size_t i = 0; i < offsets.size(); ++i) {
        acc += w[i] * impl_->position(d.clamp(t + offsets[i] * h));
      }
      r[k] = acc / (std::pow(h, k) * fact);
    }
    return r;
  }

  std::shared_ptr<const Impl> impl_;
};

inline constexpr double kDefaultArclengthTolerance = 1e-10;

/// Pseudo-speed |<a', a'>|^(1/2).
inline double speed(const Curve& c, double t) { return norm(c.derivative(t, 1)); }

/// Common causal character of the tangent over a uniform grid.
inline CausalCharacter classify_curve(const Curve& c, int grid_size,
                                      double null_tolerance = kDefaultNullTolerance) {
  if (grid_size < 2) fail(ErrorCode::InvalidArgument, "classify_curve needs grid_size >= 2");
  const Interval d = c.domain();
  std::optional<CausalCharacter> common;
  for (double t : uniform_grid(d.lo, d.hi, grid_size)) {
    const auto cc = causal_character(c.derivative(t, 1), null_tolerance);
    if (cc == CausalCharacter::Null || cc == CausalCharacter::Zero) {
      fail(ErrorCode::NullTangent, "null tangent at t = " + std::to_string(t) + " on " + c.label());
    }
    if (common && *common != cc) {
      fail(ErrorCode::MixedCausalCharacter, "tangent changes causal character on " + c.label());
    }
    common = cc;
  }
  return *common;
}

/// Pseudo arc length between t0 and t1 by adaptive Simpson quadrature.
inline double arclength(const Curve& c, double t0, double t1,
                        double tol = kDefaultArclengthTolerance,
                        double null_tolerance = kDefaultNullTolerance) {
  const Interval d = c.domain();
  if (!d.contains(t0) || !d.contains(t1)) {
    fail(ErrorCode::OutOfDomain, "arclength limits outside domain of " + c.label());
  }
  auto integrand = [&](double t) {
    const Vec3L v = c.derivative(t, 1);
    if (std::abs(inner(v, v)) <= null_tolerance) {
      fail(ErrorCode::NullTangent, "null tangent at t = " + std::to_string(t) + " on " + c.label());
    }
    return norm(v);
  };
  return adaptive_simpson(integrand, t0, t1, tol);
}

/// Ordered parameter samples with positions; the CSV exchange form.
struct CurveSamples {
  std::vector<double> parameters;
  std::vector<Vec3L> points;

  std::size_t size() const { return parameters.size(); }
};

inline CurveSamples sample(const Curve& c, int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "sample needs n >= 2");
  const Interval d = c.domain();
  CurveSamples s;
  s.parameters = uniform_grid(d.lo, d.hi, n);
  s.points.reserve(s.parameters.size());
  for (double t : s.parameters) s.points.push_back(c.position(t));
  return s;
}

/// Throws NotUnitSpeed unless |<a',a'>| = 1 within `tol` on a uniform grid,
/// and returns the curve flagged as unit-speed.
inline Curve validate_unit_speed(const Curve& c, int grid_size = 33, double tol = 1e-8) {
  const Interval d = c.domain();
  for (double t : uniform_grid(d.lo, d.hi, grid_size)) {
    const Vec3L v = c.derivative(t, 1);
    const double defect = std::abs(std::abs(inner(v, v)) - 1.0);
    if (defect > tol) {
      fail(ErrorCode::NotUnitSpeed, c.label() + " is not unit-speed at t = " + std::to_string(t),
           defect);
    }
  }
  return c.flagged_unit_speed(true);
}

}  // namespace mannheim
