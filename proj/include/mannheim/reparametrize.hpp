#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "mannheim/curve.hpp"

namespace mannheim {

inline constexpr int kDefaultArclengthTable = 1024;

/// Tabulated arc length s(t) of a non-null curve and its inverse. The
/// inverse starts from a monotone cubic interpolant of the table and is
/// polished by Newton steps on the quadrature, so t(s) is exact to
/// quadrature precision rather than interpolation precision.
class ArcLengthMap {
 public:
  ArcLengthMap(Curve curve, int table_size = kDefaultArclengthTable)
      : curve_(std::move(curve)) {
    if (table_size < 2) fail(ErrorCode::InvalidArgument, "arc length table needs >= 2 nodes");
    const Interval d = curve_.domain();
    nodes_ = uniform_grid(d.lo, d.hi, table_size);
    cumulative_.assign(nodes_.size(), 0.0);
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
      cumulative_[i] = cumulative_[i - 1] + segment(nodes_[i - 1], nodes_[i]);
    }
    inverse_ = MonotoneCubic(cumulative_, nodes_);
  }

  const Curve& curve() const { return curve_; }
  double total() const { return cumulative_.back(); }

  double speed(double t) const {
    const Vec3L v = curve_.derivative(t, 1);
    if (std::abs(inner(v, v)) <= kDefaultNullTolerance) {
      fail(ErrorCode::NullTangent, "null tangent at t = " + std::to_string(t));
    }
    return norm(v);
  }

  /// Arc length from the domain start to t.
  double arclength(double t) const {
    const Interval d = curve_.domain();
    t = d.clamp(t);
    const double h = (d.hi - d.lo) / static_cast<double>(nodes_.size() - 1);
    std::size_t i = static_cast<std::size_t>(std::floor((t - d.lo) / h));
    i = std::min(i, nodes_.size() - 2);
    if (t - nodes_[i] > 0.5 * h && i + 1 < nodes_.size()) {
      return cumulative_[i + 1] - segment(t, nodes_[i + 1]);
    }
    return cumulative_[i] + segment(nodes_[i], t);
  }

  /// Source parameter t with arclength(t) = s.
  double source_parameter(double s) const {
    const Interval d = curve_.domain();
    double t = d.clamp(inverse_(s));
    const double scale = std::max(1.0, total());
    for (int it = 0; it < 12; ++it) {
      const double f = arclength(t) - s;
      if (std::abs(f) <= 4e-16 * scale) break;
      const double next = d.clamp(t - f / speed(t));
      if (next == t) break;
      t = next;
    }
    return t;
  }

 private:
  double segment(double a, double b) const {
    if (a == b) return 0.0;
    auto v = [this](double t) { return speed(t); };
    return adaptive_simpson(v, a, b, 1e-15 * std::max(1.0, std::abs(b - a) * speed(a)), 40);
  }

  Curve curve_;
  std::vector<double> nodes_;
  std::vector<double> cumulative_;
  MonotoneCubic inverse_;
};

/// A unit-speed reparametrization together with the map back to the source
/// parameter.
struct Reparametrization {
  Curve curve;
  std::shared_ptr<const ArcLengthMap> map;

  double source_parameter(double s) const { return map->source_parameter(s); }
  double arclength(double t) const { return map->arclength(t); }
};

/// Reparametrizes by pseudo arc length. The expansion of the new curve is the
/// composition a(t(u)) with dt/du = 1/|a'(t)| solved order by order, so
/// higher derivatives stay exact.
inline Reparametrization reparametrize(const Curve& c, int table_size = kDefaultArclengthTable) {
  const CausalCharacter character = classify_curve(c, std::max(table_size / 8, 16));
  const double sign = character == CausalCharacter::Timelike ? -1.0 : 1.0;
  auto map = std::make_shared<const ArcLengthMap>(c, table_size);

  auto jet = [map, sign](double u, int order) {
    const Curve& base = map->curve();
    const double t0 = map->source_parameter(u);
    const VecSeries a = base.taylor(t0, order);
    if (order == 0) return a;
    const VecSeries v = a.derivative();
    const Series g = reciprocal(sqrt(inner(v, v) * sign));
    // Solve delta' = g(delta), delta(0) = 0, one coefficient per pass.
    Series delta(order);
    for (int pass = 0; pass < order; ++pass) {
      const Series rate = compose(g, delta.truncated(order - 1));
      Series next(order);
      for (int k = 0; k < order; ++k) next[k + 1] = rate[k] / (k + 1);
      delta = next;
    }
    return compose(a, delta);
  };
  auto position = [map](double u) { return map->curve().position(map->source_parameter(u)); };

  Curve unit = Curve::from_jet("unit(" + c.label() + ")", Interval{0.0, map->total()}, jet,
                               position)
                   .flagged_unit_speed();
  return {std::move(unit), std::move(map)};
}

inline Curve reparametrize_unit(const Curve& c, int grid_size = kDefaultArclengthTable) {
  return reparametrize(c, grid_size).curve;
}

}  // namespace mannheim
