#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "mannheim/audit.hpp"
#include "mannheim/closed_form.hpp"

namespace support {

using namespace mannheim;

inline constexpr double kStep = 1e-3;

/// C with N' chosen so that C* = C - lambda N has its binormal along N.
/// Type 2: timelike C, k = sinh^2 p, t = sinh p cosh p, lambda = -1.
inline MannheimPair genuine_type2() {
  auto k = ScalarFunction::generic([](auto s) {
    using std::sinh, mannheim::sinh;
    auto x = sinh(0.8 + 0.3 * s);
    return x * x;
  });
  auto t = ScalarFunction::generic([](auto s) {
    using std::sinh, std::cosh, mannheim::sinh, mannheim::cosh;
    auto p = 0.8 + 0.3 * s;
    return sinh(p) * cosh(p);
  });
  const auto kind = FrameKind::TimelikeCurve;
  return pair_from_curve(frenet_synthesize(kind, k, t, standard_frame(kind), {}, {0, 1}, kStep), -1.0);
}

/// Type 3: spacelike C with timelike N, k = cos^2 p / lambda, t = sin p cos p / lambda.
inline MannheimPair genuine_type3(double lambda = 2.0) {
  auto k = ScalarFunction::generic([lambda](auto s) {
    using std::cos, mannheim::cos;
    auto x = cos(0.5 + 0.3 * s);
    return x * x / lambda;
  });
  auto t = ScalarFunction::generic([lambda](auto s) {
    using std::sin, std::cos, mannheim::sin, mannheim::cos;
    auto p = 0.5 + 0.3 * s;
    return sin(p) * cos(p) / lambda;
  });
  const auto kind = FrameKind::SpacelikeEpsMinus;
  return pair_from_curve(frenet_synthesize(kind, k, t, standard_frame(kind), {}, {0, 1}, kStep), lambda);
}

/// Type 5: spacelike C with spacelike N, k = sinh^2 p / lambda, t = sinh p cosh p / lambda.
inline MannheimPair genuine_type5(double lambda = 2.0) {
  auto k = ScalarFunction::generic([lambda](auto s) {
    using std::sinh, mannheim::sinh;
    auto x = sinh(0.8 + 0.3 * s);
    return x * x / lambda;
  });
  auto t = ScalarFunction::generic([lambda](auto s) {
    using std::sinh, std::cosh, mannheim::sinh, mannheim::cosh;
    auto p = 0.8 + 0.3 * s;
    return sinh(p) * cosh(p) / lambda;
  });
  const auto kind = FrameKind::SpacelikeEpsPlus;
  return pair_from_curve(frenet_synthesize(kind, k, t, standard_frame(kind), {}, {0, 1}, kStep), lambda);
}

/// Curve kind of C for each pair type.
inline FrameKind c_kind(PairType t) {
  switch (t) {
    case PairType::Type1:
    case PairType::Type3: return FrameKind::SpacelikeEpsMinus;
    case PairType::Type2:
    case PairType::Type4: return FrameKind::TimelikeCurve;
    case PairType::Type5: return FrameKind::SpacelikeEpsPlus;
  }
  return FrameKind::TimelikeCurve;
}

struct PipelineResult {
  int offsets = 0;   // normal offsets built from curves passing the curve test
  int matched = 0;   // of those, how many classify as the requested type
  double best_rho = INFINITY;          // over every offset built
  double best_matched_rho = INFINITY;  // over the matched ones
};

/// Curve test -> normal offset on constant-curvature candidates of the
/// type's kind of C. The collinearity residual is measured on every offset,
/// including offsets whose causal characters fit no pair type.
inline PipelineResult pipeline_search(PairType type, int grid = 11) {
  PipelineResult r;
  const double values[][2] = {{1.0, 0.5}, {0.5, 1.0}, {1.0, 2.0}, {2.0, 1.0}, {0.3, 0.1}, {0.1, 0.3}};
  const FrameKind kind = c_kind(type);
  for (const auto& v : values) {
    const Curve c = frenet_synthesize(kind, ScalarFunction::constant(v[0]),
                                      ScalarFunction::constant(v[1]), standard_frame(kind), {},
                                      {0, 1}, kStep);
    CurveTestResult test;
    try {
      test = mannheim_curve_test(c, type, 5);
    } catch (const Error&) {
      continue;
    }
    if (!test.constant) continue;
    for (double sign : {1.0, -1.0}) {
      try {
        const double lambda = sign * test.lambda_estimate;
        auto cs = std::make_shared<const PairSide>(c);
        auto ss = std::make_shared<const PairSide>(offset_along_normal(c, lambda));
        const Correspondence corr{cs, ss};
        double rho = 0.0;
        for (double s : uniform_grid(0.0, cs->unit().domain().hi, grid)) {
          const FrenetFrame f = frenet_apparatus(cs->unit(), s);
          const FrenetFrame fs = frenet_apparatus(ss->unit(), corr.star_of(s));
          rho = std::max(rho, collinearity_residual(f.N, fs.B));
        }
        ++r.offsets;
        r.best_rho = std::min(r.best_rho, rho);
        bool matched = false;
        try {
          matched = classify_pair(cs->unit(), ss->unit()) == type;
        } catch (const Error&) {
        }
        if (matched) {
          ++r.matched;
          r.best_matched_rho = std::min(r.best_matched_rho, rho);
        }
      } catch (const Error&) {
      }
    }
  }
  return r;
}

}  // namespace support
