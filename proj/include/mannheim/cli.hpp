#pragma once

// mannheim-lab command line. Exit codes: 0 success (no Fail verdict), 1 a
// Fail verdict or a numerical error, 2 usage or parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mannheim/audit.hpp"
#include "mannheim/closed_form.hpp"
#include "mannheim/expr.hpp"
#include "mannheim/json_io.hpp"
#include "mannheim/samples_io.hpp"

namespace mannheim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Raised for malformed user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline FrameKind parse_kind(const std::string& s) {
  if (s == "timelike") return FrameKind::TimelikeCurve;
  if (s == "spacelike+") return FrameKind::SpacelikeEpsPlus;
  if (s == "spacelike-") return FrameKind::SpacelikeEpsMinus;
  throw UsageError("unknown curve kind '" + s + "' (timelike, spacelike+, spacelike-)");
}

inline double parse_real(const std::string& s, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || !std::isfinite(v)) {
    throw UsageError("bad " + what + " '" + s + "'");
  }
  return v;
}

inline Interval parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("range must be a:b, got '" + s + "'");
  const Interval r{parse_real(s.substr(0, colon), "range start"),
                   parse_real(s.substr(colon + 1), "range end")};
  if (!(r.hi > r.lo)) throw UsageError("empty range '" + s + "'");
  return r;
}

inline ScalarFunction expression_function(const std::string& text) {
  const Expr e = parse_expr(text);
  return ScalarFunction([e](double s) { return e(s); }, [e](const Series& s) { return e(s); });
}

struct SynthSpec {
  FrameKind kind = FrameKind::TimelikeCurve;
  std::string kappa = "1";
  std::string tau = "0";
  Interval range{0.0, 1.0};
  double step = 1e-3;
};

inline Curve synthesize(const SynthSpec& spec, const std::string& label) {
  return frenet_synthesize_detailed(spec.kind, expression_function(spec.kappa),
                                    expression_function(spec.tau), standard_frame(spec.kind), {},
                                    spec.range, spec.step, label)
      .curve;
}

/// paper-example-1 | paper-example-2 | csv:PATH | PATH.csv |
/// synth:kind=..,kappa=..,tau=..[,range=a:b][,step=h]
inline Curve parse_curve_spec(const std::string& spec) {
  if (spec == "paper-example-1") return paper_example_1();
  if (spec == "paper-example-2") return paper_example_2();
  if (spec.rfind("csv:", 0) == 0) return samples_curve(spec, read_csv_file(spec.substr(4)));
  if (spec.size() > 4 && spec.compare(spec.size() - 4, 4, ".csv") == 0) {
    return samples_curve(spec, read_csv_file(spec));
  }
  if (spec.rfind("synth:", 0) == 0) {
    SynthSpec s;
    bool have_kind = false;
    std::stringstream ss(spec.substr(6));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("expected key=value in '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "kind") {
        s.kind = parse_kind(value);
        have_kind = true;
      } else if (key == "kappa") {
        s.kappa = value;
      } else if (key == "tau") {
        s.tau = value;
      } else if (key == "range") {
        s.range = parse_range(value);
      } else if (key == "step") {
        s.step = parse_real(value, "step");
      } else {
        throw UsageError("unknown synth key '" + key + "'");
      }
    }
    if (!have_kind) throw UsageError("synth spec needs kind=");
    return synthesize(s, spec);
  }
  throw UsageError("unknown curve spec '" + spec + "'");
}

inline Curve unit_speed(const Curve& c) { return c.unit_speed() ? c : reparametrize_unit(c); }

inline std::string fp_mode() {
  const char* v = std::getenv("MANNHEIM_LAB_FP_MODE");
  if (v == nullptr || std::string(v).empty()) return "default";
  const std::string mode(v);
  if (mode != "strict" && mode != "default") {
    throw UsageError("MANNHEIM_LAB_FP_MODE must be strict or default");
  }
  return mode;
}

inline CurveSamples sample_unit_frames(const Curve& c, int grid, FrameField which) {
  CurveSamples s;
  const Interval d = c.domain();
  s.parameters = uniform_grid(d.lo, d.hi, grid);
  for (double t : s.parameters) s.points.push_back(indicatrix_of(c, which, 3).point(t));
  return s;
}

struct Emitter {
  std::ostream& out;
  std::string path;

  void text(const std::string& body) const {
    if (path.empty()) {
      out << body;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::Io, "cannot open " + path + " for writing");
    f << body;
  }
  void json(const Json& j) const { text(dump17(j) + "\n"); }
  void csv(const CurveSamples& s) const {
    std::ostringstream os;
    write_csv(os, s);
    text(os.str());
  }
};

inline Json pair_document(const MannheimPair& pair, const std::vector<VerificationReport>& reports) {
  Json j;
  j["c"] = pair.c.label();
  j["cstar"] = pair.cstar.label();
  j["lambda"] = pair.lambda;
  j["pair_type"] = type_number(pair.type);
  j["fp_mode"] = fp_mode();
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  j["reports"] = list;
  return j;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curves in Minkowski 3-space and Mannheim partner audits", "mannheim-lab"};
  app.require_subcommand(1);

  std::string curve_spec, cstar_spec, out_path, kind = "timelike", kappa = "1", tau = "0",
                                                range = "0:1", along = "binormal", which = "N";
  std::optional<double> lambda;
  int grid = 101;
  double tol = 1e-5, at = 0.0, step = 1e-3;
  int example = 0;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "output file"); };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", grid, "grid points")->check(CLI::Range(2, 1000000));
  };

  auto* classify = app.add_subcommand("classify", "causal character of a curve");
  classify->add_option("-c,--curve", curve_spec)->required();
  add_grid(classify);
  add_out(classify);

  auto* frenet = app.add_subcommand("frenet", "Frenet apparatus at one parameter");
  frenet->add_option("-c,--curve", curve_spec)->required();
  frenet->add_option("--at", at);
  add_out(frenet);

  auto* offset = app.add_subcommand("offset", "offset curve along B or N, as CSV");
  offset->add_option("-c,--curve", curve_spec)->required();
  offset->add_option("--lambda", lambda)->required();
  offset->add_option("--along", along)->check(CLI::IsMember({"binormal", "normal"}));
  add_grid(offset);
  add_out(offset);

  auto* synth = app.add_subcommand("synthesize", "integrate the Frenet system, as CSV");
  synth->add_option("--kind", kind)->check(CLI::IsMember({"timelike", "spacelike+", "spacelike-"}));
  synth->add_option("--kappa", kappa)->required();
  synth->add_option("--tau", tau)->required();
  synth->add_option("--range", range);
  synth->add_option("--step", step);
  add_grid(synth);
  add_out(synth);

  auto* verify = app.add_subcommand("pair-verify", "audit a candidate Mannheim pair");
  verify->add_option("-c,--c,--curve", curve_spec);
  verify->add_option("--cstar", cstar_spec);
  verify->add_option("--lambda", lambda)->required();
  verify->add_option("--tol", tol);
  add_grid(verify);
  add_out(verify);

  auto* indic = app.add_subcommand("indicatrix", "spherical indicatrix of T, N or B, as CSV");
  indic->add_option("-c,--curve", curve_spec)->required();
  indic->add_option("--which", which)->check(CLI::IsMember({"T", "N", "B"}));
  add_grid(indic);
  add_out(indic);

  auto* examples = app.add_subcommand("examples", "built-in example pairs");
  examples->require_subcommand(1);
  auto* examples_run = examples->add_subcommand("run", "audit example pair 1 or 2");
  examples_run->add_option("number", example)->required()->check(CLI::IsMember({1, 2}));
  examples_run->add_option("--lambda", lambda);
  examples_run->add_option("--tol", tol);
  add_grid(examples_run);
  add_out(examples_run);

  auto* plot = app.add_subcommand("export-plot", "curve samples as CSV");
  plot->add_option("-c,--curve", curve_spec)->required();
  add_grid(plot);
  add_out(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const Emitter emit{out, out_path};
  VerifyOptions options;
  try {
    fp_mode();
    if (classify->parsed()) {
      const Curve c = parse_curve_spec(curve_spec);
      Json j;
      j["curve"] = c.label();
      j["causal_character"] = to_string(classify_curve(c, grid));
      try {
        j["frame_kind"] = to_string(curve_frame_kind(unit_speed(c), std::min(grid, 33)));
      } catch (const Error& e) {
        j["frame_kind"] = nullptr;
        j["note"] = e.what();
      }
      emit.json(j);
      return kExitOk;
    }
    if (frenet->parsed()) {
      const Curve c = parse_curve_spec(curve_spec);
      const Curve u = unit_speed(c);
      Json j;
      j["curve"] = c.label();
      j["s"] = at;
      j["parameter"] = c.unit_speed() ? "given" : "arclength";
      const Json frame = to_json(frenet_apparatus(u, at));
      for (const auto& [k, v] : frame.items()) j[k] = v;
      emit.json(j);
      return kExitOk;
    }
    if (offset->parsed()) {
      const Curve u = unit_speed(parse_curve_spec(curve_spec));
      const Curve o = along == "binormal" ? offset_along_binormal(u, *lambda)
                                          : offset_along_normal(u, *lambda);
      emit.csv(sample(o, grid));
      return kExitOk;
    }
    if (synth->parsed()) {
      const SynthSpec spec{parse_kind(kind), kappa, tau, parse_range(range), step};
      emit.csv(sample(synthesize(spec, "synthesized"), grid));
      return kExitOk;
    }
    if (indic->parsed()) {
      const Curve u = unit_speed(parse_curve_spec(curve_spec));
      const FrameField f = which == "T" ? FrameField::T : which == "N" ? FrameField::N : FrameField::B;
      emit.csv(sample_unit_frames(u, grid, f));
      return kExitOk;
    }
    if (plot->parsed()) {
      emit.csv(sample(parse_curve_spec(curve_spec), grid));
      return kExitOk;
    }
    if (verify->parsed() || examples_run->parsed()) {
      options.algebraic = tol;
      MannheimPair pair;
      if (examples_run->parsed()) {
        pair = pair_from_partner(example == 1 ? paper_example_1() : paper_example_2(),
                                 lambda.value_or(20.0));
      } else if (!curve_spec.empty() && !cstar_spec.empty()) {
        pair = pair_from_curves(parse_curve_spec(curve_spec), parse_curve_spec(cstar_spec), *lambda);
      } else if (!curve_spec.empty()) {
        pair = pair_from_curve(parse_curve_spec(curve_spec), *lambda);
      } else if (!cstar_spec.empty()) {
        pair = pair_from_partner(parse_curve_spec(cstar_spec), *lambda);
      } else {
        throw UsageError("pair-verify needs --c, --cstar or both");
      }
      const auto reports = verify_pair(pair, grid, options);
      Json j = pair_document(pair, reports);
      if (examples_run->parsed()) j["example"] = example;
      emit.json(j);
      return any_failed(reports) ? kExitFail : kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool input = e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::Io ||
                       e.code() == ErrorCode::InvalidArgument;
    return input ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}

}  // namespace mannheim::cli
