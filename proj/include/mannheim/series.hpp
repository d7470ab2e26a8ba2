#pragma once

// Truncated Taylor series. Coefficient k holds f^(k)(t0) / k!, so products
// are Cauchy products and composition is Horner evaluation. Curves hand out
// their local expansions in this form, which lets offsets, frames and
// reparametrizations carry exact derivatives without finite differences.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "mannheim/lorentz.hpp"

namespace mannheim {

template <class T>
class Taylor {
 public:
  Taylor() = default;
  explicit Taylor(int order) : c_(static_cast<std::size_t>(order) + 1, T{}) {}
  explicit Taylor(std::vector<T> coeffs) : c_(std::move(coeffs)) {}

  static Taylor constant(const T& v, int order) {
    Taylor r(order);
    r.c_[0] = v;
    return r;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  T& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const T& value() const { return c_.front(); }
  const std::vector<T>& coefficients() const { return c_; }

  /// k-th derivative at the expansion point.
  T derivative_value(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return c_[static_cast<std::size_t>(k)] * f;
  }

  /// Series of the derivative; one order shorter.
  Taylor derivative() const {
    assert(order() >= 1);
    Taylor r(order() - 1);
    for (int k = 0; k <= r.order(); ++k) r[k] = c_[k + 1] * static_cast<double>(k + 1);
    return r;
  }

  Taylor truncated(int order) const {
    Taylor r(std::min(order, this->order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = c_[k];
    return r;
  }

  Taylor& operator+=(const Taylor& o) {
    truncate_to(o.order());
    for (int k = 0; k <= order(); ++k) c_[k] += o[k];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    truncate_to(o.order());
    for (int k = 0; k <= order(); ++k) c_[k] -= o[k];
    return *this;
  }
  Taylor& operator*=(double s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator-(Taylor a) { return a *= -1.0; }
  friend Taylor operator*(Taylor a, double s) { return a *= s; }
  friend Taylor operator*(double s, Taylor a) { return a *= s; }
  friend Taylor operator/(Taylor a, double s) { return a *= 1.0 / s; }

 private:
  void truncate_to(int order) {
    if (order < this->order()) c_.resize(static_cast<std::size_t>(order) + 1);
  }

  std::vector<T> c_;
};

using Series = Taylor<double>;
using VecSeries = Taylor<Vec3L>;

/// The identity map t0 + w expanded about t0.
inline Series variable(double t0, int order) {
  Series r(order);
  r[0] = t0;
  if (order >= 1) r[1] = 1.0;
  return r;
}

inline Series operator+(Series a, double s) {
  a[0] += s;
  return a;
}
inline Series operator+(double s, Series a) { return a + s; }
inline Series operator-(Series a, double s) {
  a[0] -= s;
  return a;
}
inline Series operator-(double s, const Series& a) { return (-a) + s; }

namespace detail {
template <class A, class B, class R, class Op>
Taylor<R> cauchy(const Taylor<A>& a, const Taylor<B>& b, Op op) {
  const int n = std::min(a.order(), b.order());
  Taylor<R> r(n);
  for (int k = 0; k <= n; ++k) {
    R acc{};
    for (int j = 0; j <= k; ++j) acc += op(a[j], b[k - j]);
    r[k] = acc;
  }
  return r;
}
}  // namespace detail

inline Series operator*(const Series& a, const Series& b) {
  return detail::cauchy<double, double, double>(a, b, [](double x, double y) { return x * y; });
}
inline VecSeries operator*(const Series& a, const VecSeries& b) {
  return detail::cauchy<double, Vec3L, Vec3L>(a, b,
                                              [](double x, const Vec3L& y) { return x * y; });
}
inline VecSeries operator*(const VecSeries& b, const Series& a) { return a * b; }

inline Series inner(const VecSeries& a, const VecSeries& b) {
  return detail::cauchy<Vec3L, Vec3L, double>(
      a, b, [](const Vec3L& x, const Vec3L& y) { return inner(x, y); });
}
inline VecSeries cross(const VecSeries& a, const VecSeries& b) {
  return detail::cauchy<Vec3L, Vec3L, Vec3L>(
      a, b, [](const Vec3L& x, const Vec3L& y) { return cross(x, y); });
}

inline Series reciprocal(const Series& f) {
  Series q(f.order());
  q[0] = 1.0 / f[0];
  for (int k = 1; k <= f.order(); ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += f[j] * q[k - j];
    q[k] = -acc / f[0];
  }
  return q;
}

inline Series operator/(const Series& a, const Series& b) { return a * reciprocal(b); }
inline Series operator/(double s, const Series& b) { return reciprocal(b) * s; }
inline VecSeries operator/(const VecSeries& a, const Series& b) { return reciprocal(b) * a; }

inline Series sqrt(const Series& f) {
  Series r(f.order());
  r[0] = std::sqrt(f[0]);
  for (int k = 1; k <= f.order(); ++k) {
    double acc = f[k];
    for (int j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc / (2.0 * r[0]);
  }
  return r;
}

/// sqrt(|f|) with the sign of |.| frozen at the expansion point.
inline Series sqrt_abs(const Series& f) { return f[0] < 0.0 ? sqrt(-f) : sqrt(f); }

inline Series exp(const Series& f) {
  Series e(f.order());
  e[0] = std::exp(f[0]);
  for (int k = 1; k <= f.order(); ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * f[j] * e[k - j];
    e[k] = acc / k;
  }
  return e;
}

namespace detail {
// s' = c f', c' = sign * s f'; sign = -1 for sin/cos, +1 for sinh/cosh.
inline void trig_pair(const Series& f, double s0, double c0, double sign, Series& s, Series& c) {
  s = Series(f.order());
  c = Series(f.order());
  s[0] = s0;
  c[0] = c0;
  for (int k = 1; k <= f.order(); ++k) {
    double as = 0.0;
    double ac = 0.0;
    for (int j = 1; j <= k; ++j) {
      as += j * f[j] * c[k - j];
      ac += j * f[j] * s[k - j];
    }
    s[k] = as / k;
    c[k] = sign * ac / k;
  }
}
}  // namespace detail

inline Series sin(const Series& f) {
  Series s, c;
  detail::trig_pair(f, std::sin(f[0]), std::cos(f[0]), -1.0, s, c);
  return s;
}
inline Series cos(const Series& f) {
  Series s, c;
  detail::trig_pair(f, std::sin(f[0]), std::cos(f[0]), -1.0, s, c);
  return c;
}
inline Series sinh(const Series& f) {
  Series s, c;
  detail::trig_pair(f, std::sinh(f[0]), std::cosh(f[0]), 1.0, s, c);
  return s;
}
inline Series cosh(const Series& f) {
  Series s, c;
  detail::trig_pair(f, std::sinh(f[0]), std::cosh(f[0]), 1.0, s, c);
  return c;
}

inline Series pow(const Series& f, unsigned n) {
  Series r = Series::constant(1.0, f.order());
  Series base = f;
  while (n > 0) {
    if (n & 1u) r = r * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return r;
}

/// outer(inner(w)) where `inner` has zero constant term (it is a displacement
/// of the expansion point of `outer`).
template <class T>
Taylor<T> compose(const Taylor<T>& outer, const Series& inner) {
  const int n = std::min(outer.order(), inner.order());
  Series shift = inner.truncated(n);
  shift[0] = 0.0;
  const int top = std::min(outer.order(), n);
  Taylor<T> r = Taylor<T>::constant(outer[top], n);
  for (int k = top - 1; k >= 0; --k) {
    // r = outer[k] + shift * r
    Taylor<T> next(n);
    for (int m = 0; m <= n; ++m) {
      T acc{};
      for (int j = 1; j <= m; ++j) acc += shift[j] * r[m - j];
      next[m] = acc;
    }
    next[0] += outer[k];
    r = std::move(next);
  }
  return r;
}

}  // namespace mannheim
