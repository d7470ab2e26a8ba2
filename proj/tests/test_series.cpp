#include <cmath>
#include <vector>

#include "mannheim/numerics.hpp"
#include "mannheim/scalar_function.hpp"
#include "mannheim/series.hpp"
#include "test_util.hpp"

using namespace mannheim;
using Catch::Approx;

TEST_CASE("series arithmetic matches known expansions") {
  const Series x = variable(0.7, 6);
  const Series f = sinh(x) * cosh(x);  // sinh(2x)/2
  for (int k = 0; k <= 6; ++k) {
    // k-th derivative of sinh(2x)/2 is 2^(k-1) (sinh or cosh)(2x)
    const double d = std::pow(2.0, k - 1) * (k % 2 == 0 ? std::sinh(1.4) : std::cosh(1.4));
    REQUIRE(f.derivative_value(k) == Approx(d).epsilon(1e-13));
  }
  const Series g = exp(sin(x)) / (1.0 + x * x);
  const Series r = g * (1.0 + x * x) - exp(sin(x));
  for (int k = 0; k <= 6; ++k) REQUIRE(std::abs(r[k]) < 1e-13);
  const Series q = sqrt(1.0 + x * x);
  const Series back = q * q - (1.0 + x * x);
  for (int k = 0; k <= 6; ++k) REQUIRE(std::abs(back[k]) < 1e-13);
  REQUIRE(pow(x, 3)[0] == Approx(0.343));
  REQUIRE(pow(x, 3).derivative_value(3) == Approx(6.0));
}

TEST_CASE("series composition") {
  const Series inner_fn = variable(0.2, 5) * 3.0;
  const Series outer = sin(variable(inner_fn[0], 5));
  const Series c = compose(outer, inner_fn);
  const Series direct = sin(inner_fn);
  for (int k = 0; k <= 5; ++k) REQUIRE(c[k] == Approx(direct[k]).margin(1e-14));
}

TEST_CASE("finite difference weights") {
  const std::vector<double> nodes{-1.0, 0.0, 1.0};
  const auto w = fd_weights(0.0, nodes, 2);
  REQUIRE(w[0] == Approx(1.0));
  REQUIRE(w[1] == Approx(-2.0));
  REQUIRE(w[2] == Approx(1.0));
  const auto f = [](double t) { return std::exp(t); };
  REQUIRE(fd_derivative(f, 0.3, 1, 1e-3) == Approx(std::exp(0.3)).epsilon(1e-9));
  REQUIRE(fd_derivative(f, 0.0, 2, 1e-2, 0.0, 1.0) == Approx(1.0).epsilon(1e-6));
}

TEST_CASE("quadrature and monotone interpolation") {
  REQUIRE(adaptive_simpson([](double t) { return std::cos(t); }, 0.0, 2.0, 1e-12) ==
          Approx(std::sin(2.0)).epsilon(1e-11));
  const MonotoneCubic m({0, 1, 2, 3}, {0, 1, 1.5, 4});
  REQUIRE(m(1.0) == 1.0);
  double prev = m(0.0);
  for (double x = 0.01; x <= 3.0; x += 0.01) {
    REQUIRE(m(x) >= prev - 1e-15);
    prev = m(x);
  }
  const auto g = uniform_grid(0.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  REQUIRE(g.back() == 1.0);
}

TEST_CASE("scalar functions") {
  const ScalarFunction c = ScalarFunction::constant(2.5);
  REQUIRE(c(3.0) == 2.5);
  REQUIRE(c.series(1.0, 3)[1] == 0.0);
  const auto f = ScalarFunction::generic([](auto s) {
    using std::cos, mannheim::cos;
    return cos(s) * 2.0;
  });
  REQUIRE(f(0.0) == 2.0);
  REQUIRE(f.series(0.0, 2)[2] == Approx(-1.0));
  const auto v = ScalarFunction::from_values([](double s) { return s * s * s; });
  REQUIRE(v.series(1.0, 2)[1] == Approx(3.0).epsilon(1e-8));
}
