#pragma once

// Small numerical kernels shared by the curve machinery: finite-difference
// weights, adaptive Simpson quadrature and monotone cubic interpolation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "mannheim/error.hpp"

namespace mannheim {

/// Fornberg's recursion: weights for the m-th derivative at x0 using the
/// given nodes. Returns one weight per node.
inline std::vector<double> fd_weights(double x0, std::span<const double> nodes, int m) {
  const int n = static_cast<int>(nodes.size()) - 1;
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n + 1),
                                     std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) w[i] = c[i][m];
  return w;
}

/// Stencil offsets (in units of h) for a fourth-order approximation of the
/// k-th derivative at t, shifted one-sided when the central stencil would
/// leave [lo, hi].
inline std::vector<double> fd_stencil(int k, double t, double h, double lo, double hi) {
  const int half = (k + 3) / 2;
  std::vector<double> offsets;
  if (t - half * h >= lo && t + half * h <= hi) {
    for (int i = -half; i <= half; ++i) offsets.push_back(i);
    return offsets;
  }
  const int count = k + 4;
  // Slide a window of `count` points so it stays inside the domain.
  int first = -(count - 1) / 2;
  if (t + first * h < lo) first = static_cast<int>(std::ceil((lo - t) / h - 1e-12));
  if (t + (first + count - 1) * h > hi) {
    first = static_cast<int>(std::floor((hi - t) / h + 1e-12)) - (count - 1);
  }
  for (int i = 0; i < count; ++i) offsets.push_back(first + i);
  return offsets;
}

/// Fourth-order finite difference of a scalar function, respecting the domain.
inline double fd_derivative(const std::function<double(double)>& f, double t, int k, double h,
                            double lo = -std::numeric_limits<double>::infinity(),
                            double hi = std::numeric_limits<double>::infinity()) {
  const auto offsets = fd_stencil(k, t, h, lo, hi);
  std::vector<double> nodes(offsets.size());
  for (std::size_t i = 0; i < offsets.size(); ++i) nodes[i] = offsets[i];
  const auto w = fd_weights(0.0, nodes, k);
  double acc = 0.0;
  for (std::size_t i = 0; i < offsets.size(); ++i) acc += w[i] * f(t + offsets[i] * h);
  return acc / std::pow(h, k);
}

namespace detail {
inline double simpson_step(const std::function<double(double)>& f, double a, double b,
                           double fa, double fm, double fb, double whole, double tol,
                           int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson quadrature to absolute tolerance `tol`.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-10, int max_depth = 48) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Fritsch-Carlson monotone piecewise cubic Hermite interpolant.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) fail(ErrorCode::InvalidArgument, "interpolant needs >= 2 nodes");
    for (std::size_t i = 1; i < n; ++i) {
      if (!(x_[i] > x_[i - 1])) fail(ErrorCode::InvalidArgument, "interpolant nodes must increase");
    }
    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    m_.assign(n, 0.0);
    m_[0] = delta[0];
    m_[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      m_[i] = (delta[i - 1] * delta[i] <= 0.0) ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (delta[i] == 0.0) {
        m_[i] = m_[i + 1] = 0.0;
        continue;
      }
      const double a = m_[i] / delta[i];
      const double b = m_[i + 1] / delta[i];
      const double r = a * a + b * b;
      if (r > 9.0) {
        const double t = 3.0 / std::sqrt(r);
        m_[i] = t * a * delta[i];
        m_[i + 1] = t * b * delta[i];
      }
    }
  }

  double operator()(double x) const {
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * m_[i] +
           (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * m_[i + 1];
  }

  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& values() const { return y_; }

 private:
  std::size_t segment(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    return std::min(i, x_.size() - 2);
  }

  std::vector<double> x_, y_, m_;
};

/// Uniform grid of n points over [a, b] with exact endpoints.
inline std::vector<double> uniform_grid(double a, double b, int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "grid needs at least 2 points");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
  g.back() = b;
  return g;
}

}  // namespace mannheim
