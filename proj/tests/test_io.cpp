#include <cmath>
#include <sstream>

#include <json.hpp>

#include "mannheim/closed_form.hpp"
#include "mannheim/json_io.hpp"
#include "mannheim/mannheim.hpp"
#include "mannheim/samples_io.hpp"
#include "test_util.hpp"

using namespace mannheim;
using Catch::Approx;

TEST_CASE("CSV round trip is lossless") {
  const CurveSamples s = sample(offset_along_binormal(paper_example_1(), 20.0), 37);
  std::stringstream buf;
  write_csv(buf, s);
  REQUIRE(buf.str().rfind("t,x1,x2,x3\n", 0) == 0);
  const CurveSamples back = read_csv(buf);
  REQUIRE(back.parameters == s.parameters);
  for (std::size_t i = 0; i < s.size(); ++i) {
    REQUIRE(back.points[i].x1 == s.points[i].x1);
    REQUIRE(back.points[i].x2 == s.points[i].x2);
    REQUIRE(back.points[i].x3 == s.points[i].x3);
  }
}

TEST_CASE("CSV input errors") {
  const auto read = [](const std::string& text) {
    std::stringstream in(text);
    return read_csv(in);
  };
  REQUIRE_THROWS_CODE(read(""), ErrorCode::Io);
  REQUIRE_THROWS_CODE(read("t,x,y,z\n"), ErrorCode::Io);
  REQUIRE_THROWS_CODE(read("t,x1,x2,x3\n0,1,2\n"), ErrorCode::Io);
  REQUIRE_THROWS_CODE(read("t,x1,x2,x3\n0,1,2,abc\n"), ErrorCode::Io);
  REQUIRE_THROWS_CODE(read("t,x1,x2,x3\n1,0,0,0\n1,0,0,0\n"), ErrorCode::Io);
  REQUIRE(read("t,x1,x2,x3\r\n0,1,2,3\r\n").size() == 1);
  REQUIRE_THROWS_CODE(read_csv_file("/nonexistent/curve.csv"), ErrorCode::Io);
}

TEST_CASE("curves from samples") {
  const CurveSamples s = sample(paper_example_2(), 201);
  const Curve c = samples_curve("samples", s);
  require_vec(c.position(s.parameters[17]), s.points[17], 0.0);
  require_vec(c.position(0.4321), paper_example_2().position(0.4321), 1e-12);
  const FrenetFrame f = frenet_apparatus(c.flagged_unit_speed(), 0.5);
  REQUIRE(f.kappa == Approx(2.0).epsilon(1e-6));
  REQUIRE(f.tau == Approx(std::sqrt(3.0)).epsilon(1e-4));
  REQUIRE_THROWS_CODE(samples_curve("one", CurveSamples{{0.0}, {Vec3L{}}}), ErrorCode::InvalidArgument);
}

TEST_CASE("JSON output") {
  SECTION("17 significant digits, NaN as null") {
    Json j;
    j["x"] = 0.1;
    j["v"] = std::vector<double>{1.0 / 3.0, std::nan("")};
    const std::string text = dump17(j);
    REQUIRE(text.find("0.10000000000000001") != std::string::npos);
    REQUIRE(text.find("[0.33333333333333331, null]") != std::string::npos);
    const auto parsed = nlohmann::json::parse(text);
    REQUIRE(parsed["x"].get<double>() == 0.1);
  }
  SECTION("report schema") {
    const VerificationReport r = make_report("distance", {0, 1}, {1e-15, 2e-15}, 1e-9, true);
    const auto parsed = nlohmann::json::parse(dump17(to_json(r)));
    for (const char* key : {"identity", "grid", "residuals", "max_residual", "mean_residual", "tolerance", "verdict"}) {
      REQUIRE(parsed.contains(key));
    }
    REQUIRE(parsed["verdict"] == "Pass");
    REQUIRE(parsed["max_residual"].get<double>() == 2e-15);
    REQUIRE(!parsed.contains("note"));
  }
  SECTION("frame") {
    const auto parsed = nlohmann::json::parse(dump17(to_json(frenet_apparatus(paper_example_2(), 0.0))));
    REQUIRE(parsed["kind"] == "timelike");
    REQUIRE(parsed["kappa"].get<double>() == Approx(2.0));
    REQUIRE(parsed["T"].size() == 3);
  }
}
