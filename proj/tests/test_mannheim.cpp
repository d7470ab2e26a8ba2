#include <cmath>

#include "mannheim/audit.hpp"
#include "mannheim/closed_form.hpp"
#include "oracle_constants.hpp"
#include "support.hpp"
#include "test_util.hpp"

using namespace mannheim;
using Catch::Approx;

namespace {
const double r3 = std::sqrt(3.0);

const VerificationReport& find(const std::vector<VerificationReport>& rs, const std::string& id) {
  for (const auto& r : rs) {
    if (r.identity == id) return r;
  }
  FAIL("no report " << id);
  return rs.front();
}
}  // namespace

TEST_CASE("binormal offsets of the examples") {
  const Curve a = offset_along_binormal(paper_example_2(), 20.0);
  for (double s : {0.0, 0.5, 1.0}) {
    require_vec(a.position(s),
                {2 * std::sinh(s) - 20 * r3 * std::cosh(s), 2 * std::cosh(s) - 20 * r3 * std::sinh(s), r3 * s - 40},
                1e-12);
  }
  // the second derivative of the offset in the frame of C*
  const FrenetFrame f = frenet_apparatus(paper_example_2(), 0.4);
  require_vec(a.derivative(0.4, 2), -40 * r3 * f.T + 2 * f.N - 60 * f.B, 1e-12);
  REQUIRE_THROWS_CODE(offset_along_binormal(paper_example_2(), 0.0), ErrorCode::ZeroLambda);
}

TEST_CASE("normal offsets") {
  const Curve c = paper_example_2();
  const Curve o = offset_along_normal(c, 1.0);
  for (double s : {0.0, 0.7}) REQUIRE(norm(o.position(s) - c.position(s)) == Approx(1.0).epsilon(1e-14));
  REQUIRE_THROWS_CODE(offset_along_normal(straight_line("line", {}, {0, 1, 0}).flagged_unit_speed(), 1.0),
                      ErrorCode::VanishingCurvature);

  const MannheimPair p = pair_from_curve(support::genuine_type2().c, -3.0);
  REQUIRE(verify_distance(sample_pair(p, 11)).max_residual < 1e-9);
}

TEST_CASE("normal offset inverts the example-2 binormal offset only up to the collinearity defect") {
  // C = C* + 20 B*; C - 20 N_C would give C* back only if N_C were along B*.
  const MannheimPair p = pair_from_partner(paper_example_2(), 20.0);
  const Curve back = offset_along_normal(p.c, 20.0);
  const double gap = norm(back.position(0.0) - paper_example_2().position(0.0));
  // |20 B* - 20 N_C| at s = 0 for the oracle's residual
  REQUIRE(gap > 1.0);
  REQUIRE(oracle::kExample2.at("rho")[0] > 1.0);
}

TEST_CASE("pair classification") {
  REQUIRE(pair_from_partner(paper_example_1(), 20.0).type == PairType::Type3);
  REQUIRE(pair_from_partner(paper_example_2(), 20.0).type == PairType::Type1);
  REQUIRE(classify_kinds(FrameKind::TimelikeCurve, FrameKind::TimelikeCurve) == PairType::Type2);
  REQUIRE(classify_kinds(FrameKind::TimelikeCurve, FrameKind::SpacelikeEpsPlus) == PairType::Type4);
  REQUIRE(classify_kinds(FrameKind::SpacelikeEpsPlus, FrameKind::SpacelikeEpsMinus) == PairType::Type5);
  REQUIRE_THROWS_CODE(classify_kinds(FrameKind::SpacelikeEpsPlus, FrameKind::SpacelikeEpsPlus),
                      ErrorCode::UnsupportedCombination);
  REQUIRE_THROWS_CODE(pair_from_curves(paper_example_1(), paper_example_2({0, 2}), 1.0),
                      ErrorCode::InvalidArgument);
}

TEST_CASE("collinearity residual") {
  REQUIRE(collinearity_residual({0, 1, 0}, {0, 1, 0}) == 0.0);
  REQUIRE(collinearity_residual({0, 1, 0}, {0, -2, 0}) == 0.0);
  REQUIRE(collinearity_residual({0, 1, 0}, {0, 0, 1}) == Approx(1.0));
  const MannheimPair p2 = pair_from_partner(paper_example_2(), 20.0);
  REQUIRE(mannheim_residual(p2, 0.0) == Approx(oracle::kExample2.at("rho")[0]).epsilon(1e-10));
  const MannheimPair p1 = pair_from_partner(paper_example_1(), 20.0);
  REQUIRE(mannheim_residual(p1, 0.0) == Approx(oracle::kExample1.at("rho")[0]).epsilon(1e-10));
}

TEST_CASE("curve test") {
  const CurveTestResult r = mannheim_curve_test(paper_example_2(), PairType::Type1, 9);
  REQUIRE(r.constant);
  REQUIRE(r.profile[3] == Approx(0.75).epsilon(1e-13));
  REQUIRE(r.lambda_estimate == Approx(2.0 / r3).epsilon(1e-13));
  const Curve c = frenet_synthesize(FrameKind::SpacelikeEpsMinus, ScalarFunction::constant(1.0),
                                    ScalarFunction::constant(2.0), standard_frame(FrameKind::SpacelikeEpsMinus),
                                    {}, {0, 1}, 1e-3);
  REQUIRE_THROWS_CODE(mannheim_curve_test(c, PairType::Type1, 5), ErrorCode::NegativeConditionValue);
  REQUIRE_THROWS_CODE(mannheim_curve_test(frenet_synthesize(FrameKind::TimelikeCurve, ScalarFunction::constant(1.0),
                                                            ScalarFunction::constant(0.0),
                                                            standard_frame(FrameKind::TimelikeCurve), {}, {0, 1}, 1e-3),
                                          PairType::Type2, 5),
                      ErrorCode::VanishingTorsion);
}

TEST_CASE("theta recovery from frame data") {
  const FrenetFrame star = standard_frame(FrameKind::TimelikeCurve);  // T* = e1, N* = e2
  SECTION("T = N* gives zero") {
    const ThetaValue v = theta_projection(PairType::Type1, star.N, star.T, star.N);
    REQUIRE(v.theta == 0.0);
    REQUIRE(v.defect == 0.0);
  }
  SECTION("prescribed angles come back") {
    for (double th : {-1.3, -0.2, 0.0, 0.45, 2.1}) {
      for (double b : {1.0, -1.0}) {
        const Vec3L t1 = b * (std::sinh(th) * star.T + std::cosh(th) * star.N);
        const ThetaValue v1 = theta_projection(PairType::Type1, t1, star.T, star.N);
        REQUIRE(v1.theta == Approx(th).margin(1e-10));
        REQUIRE(v1.branch == static_cast<int>(b));
        REQUIRE(v1.residual < 1e-12);
        const Vec3L t2 = b * (std::cosh(th) * star.T + std::sinh(th) * star.N);
        REQUIRE(theta_projection(PairType::Type2, t2, star.T, star.N).theta == Approx(th).margin(1e-10));
      }
      const FrenetFrame sp = standard_frame(FrameKind::SpacelikeEpsMinus);
      const Vec3L t5 = std::cos(th) * sp.T + std::sin(th) * sp.N;
      REQUIRE(theta_projection(PairType::Type5, t5, sp.T, sp.N).theta == Approx(th).margin(1e-10));
    }
  }
  SECTION("examples") {
    const MannheimPair p2 = pair_from_partner(paper_example_2(), 20.0);
    REQUIRE(theta(p2, 0.0).theta == Approx(oracle::kExample2.at("theta")[0]).margin(1e-10));
    const MannheimPair p1 = pair_from_partner(paper_example_1(), 20.0);
    REQUIRE_THROWS_CODE(theta(p1, 0.0), ErrorCode::InconsistentDecomposition);
    REQUIRE(theta_projection(p1, 0.0).theta == Approx(oracle::kExample1.at("theta")[0]).margin(1e-10));
  }
}

TEST_CASE("identity tables on their own solutions") {
  const double lambda = 1.7, kappa = 0.9, tau = 0.4;
  REQUIRE(torsion_relation_residual(PairType::Type1, lambda, kappa, tau, -kappa / (lambda * tau)) == 0.0);
  REQUIRE(torsion_relation_residual(PairType::Type3, lambda, kappa, tau, kappa / (lambda * tau)) == 0.0);

  SECTION("clauses (iii) and (iv) imply the squared form and the indicatrix ratio") {
    const double th = 0.6, tstar = 1.3;
    const double k = tstar * std::cosh(th), t = -tstar * std::sinh(th);
    const auto q = frame_relation_residuals(PairType::Type1, th, 0.0, k, t, 0.0, tstar);
    REQUIRE(q[2] == Approx(0.0).margin(1e-15));
    REQUIRE(q[3] == Approx(0.0).margin(1e-15));
    REQUIRE(torsion_square(PairType::Type1, k, t, tstar).squared < 1e-14);
    REQUIRE(t / k == Approx(-std::tanh(th)).epsilon(1e-14));
    const auto ind = indicatrix_residuals(PairType::Type1, th, k, t, tstar, 2.0, 2.0, 1.0);
    REQUIRE(ind[0] < 1e-14);
    REQUIRE(ind[1] < 1e-14);
  }
  SECTION("constant theta gives constant mu") {
    const LinearRelation a = linear_relation(PairType::Type1, lambda, 0.3, 0.1, 0.2);
    const LinearRelation b = linear_relation(PairType::Type1, lambda, 0.3, 0.5, 0.9);
    REQUIRE(std::abs(a.mu - b.mu) < 1e-12);
  }
  REQUIRE(curvature_center_ratio(2.0, 0.3, 0.5) == 0.0);
}

TEST_CASE("reports on the example pairs") {
  for (int n : {1, 2}) {
    const auto& table = n == 1 ? oracle::kExample1 : oracle::kExample2;
    const MannheimPair p = pair_from_partner(n == 1 ? paper_example_1() : paper_example_2(), 20.0);
    const auto reports = verify_pair(p, oracle::kGrid);
    REQUIRE(reports.size() == 8);
    REQUIRE(find(reports, "mannheim_residual").verdict == Verdict::Reported);
    REQUIRE(find(reports, "mannheim_residual").note == "hypothesis not met");
    REQUIRE(find(reports, "distance").verdict == Verdict::Pass);
    for (const char* id : {"torsion_relation", "linear_relation", "frame_relations", "torsion_square",
                           "indicatrix_relations"}) {
      INFO(id);
      REQUIRE(find(reports, id).verdict == Verdict::Reported);
    }
    const auto& ratio = find(reports, "curvature_center_ratio");
    REQUIRE(ratio.verdict == Verdict::Reported);
    REQUIRE(ratio.note == "ConstantRatio");
    REQUIRE(ratio.diagnostic("mean") == Approx(table.at("ratio")[0]).epsilon(1e-10));
    const auto& lin = find(reports, "linear_relation");
    REQUIRE(lin.diagnostic("mu_min") == Approx(table.at("mu")[0]).epsilon(1e-9));
    REQUIRE(lin.diagnostic("mu_spread") < 1e-12);
    REQUIRE(!any_failed(reports));
  }
}

TEST_CASE("exact pairs satisfy the collinearity hypothesis") {
  for (const MannheimPair& p : {support::genuine_type2(), support::genuine_type3(), support::genuine_type5()}) {
    const PairData d = sample_pair(p, 11);
    REQUIRE(d.max_rho() < 1e-10);
    REQUIRE(verify_distance(d).verdict == Verdict::Pass);
  }
  REQUIRE(support::genuine_type2().type == PairType::Type2);
  REQUIRE(support::genuine_type3().type == PairType::Type3);
  REQUIRE(support::genuine_type5().type == PairType::Type5);
}

TEST_CASE("on an exact type-2 pair the torsion relation holds with the opposite sign") {
  const MannheimPair p = support::genuine_type2();
  const PairData d = sample_pair(p, 11);
  for (const auto& q : d.points) {
    REQUIRE(q.tau_star == Approx(-q.kappa / (p.lambda * q.tau)).epsilon(1e-9));
    REQUIRE(q.kappa_star == Approx(-q.dtheta).margin(1e-6));
  }
  const auto reports = verify_all(d);
  REQUIRE(find(reports, "torsion_relation").verdict == Verdict::Fail);
  REQUIRE(any_failed(reports));
}

TEST_CASE("exact type-3 and type-5 pairs satisfy the torsion relation") {
  for (const MannheimPair& p : {support::genuine_type3(), support::genuine_type5()}) {
    const auto reports = verify_pair(p, 11);
    REQUIRE(find(reports, "torsion_relation").verdict == Verdict::Pass);
    REQUIRE(find(reports, "curvature_center_ratio").verdict == Verdict::Pass);
    const auto& lin = find(reports, "linear_relation");
    REQUIRE(lin.verdict == Verdict::Fail);
    REQUIRE(lin.note.find("InconsistentDecomposition") != std::string::npos);
  }
}

TEST_CASE("ratio verifier flags constant profiles without failing") {
  PairData d{PairType::Type1, 2.0, {}};
  for (int i = 0; i < 5; ++i) {
    PairPoint p;
    p.s = i;
    p.kappa = 0.3;
    p.kappa_star = 0.5 + 0.1 * i;
    d.points.push_back(p);
  }
  REQUIRE(verify_ratio_nonconstant(d).verdict == Verdict::Pass);
  for (auto& p : d.points) p.kappa_star = 0.5;
  const VerificationReport r = verify_ratio_nonconstant(d);
  REQUIRE(r.verdict == Verdict::Reported);
  REQUIRE(r.note == "ConstantRatio");
  REQUIRE(r.diagnostic("std") == 0.0);
  REQUIRE(r.residuals[0] == 0.0);
}
