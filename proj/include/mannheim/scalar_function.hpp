#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <type_traits>
#include <utility>

#include "mannheim/numerics.hpp"
#include "mannheim/series.hpp"

namespace mannheim {

/// A real function of one variable that can also hand out its local Taylor
/// expansion. Prescribed curvature and torsion use this so that synthesized
/// curves expose exact higher derivatives.
class ScalarFunction {
 public:
  using ValueFn = std::function<double(double)>;
  using SeriesFn = std::function<Series(const Series&)>;

  ScalarFunction() : ScalarFunction(constant(0.0)) {}

  static ScalarFunction constant(double c) {
    return ScalarFunction([c](double) { return c; },
                          [c](const Series& x) { return Series::constant(c, x.order()); });
  }

  /// `f` must be callable with both `double` and `Series`; the mannheim
  /// namespace provides sin/cos/sinh/cosh/exp/sqrt/pow for Series.
  template <class F>
  static ScalarFunction generic(F f) {
    return ScalarFunction([f](double s) { return static_cast<double>(f(s)); },
                          [f](const Series& x) {
                            auto r = f(x);
                            if constexpr (std::is_arithmetic_v<decltype(r)>) {
                              return Series::constant(static_cast<double>(r), x.order());
                            } else {
                              return Series(std::move(r));
                            }
                          });
  }

  /// Value-only function; expansions come from fourth-order finite
  /// differences, so only low orders are meaningful.
  static ScalarFunction from_values(ValueFn f, double step = 1e-3) {
    auto fn = std::make_shared<ValueFn>(std::move(f));
    return ScalarFunction(
        [fn](double s) { return (*fn)(s); },
        [fn, step](const Series& x) {
          Series r(x.order());
          const double s = x[0];
          r[0] = (*fn)(s);
          double fact = 1.0;
          for (int k = 1; k <= x.order(); ++k) {
            fact *= k;
            r[k] = fd_derivative(*fn, s, k, step * (1.0 + 0.5 * (k - 1))) / fact;
          }
          return r;
        });
  }

  ScalarFunction(ValueFn value, SeriesFn series)
      : value_(std::move(value)), series_(std::move(series)) {}

  double operator()(double s) const { return value_(s); }

  /// Expansion about s to the given order.
  Series series(double s, int order) const { return series_(variable(s, order)); }

 private:
  ValueFn value_;
  SeriesFn series_;
};

}  // namespace mannheim
