#pragma once

// JSON for reports and frames. Documents are built as nlohmann::ordered_json
// but serialized here so that every double is printed with %.17g (and NaN
// or infinity as null).

#include <cmath>
#include <string>

#include <json.hpp>

#include "mannheim/frenet.hpp"
#include "mannheim/report.hpp"
#include "mannheim/samples_io.hpp"

namespace mannheim {

using Json = nlohmann::ordered_json;

namespace detail {
inline void dump_string(const std::string& s, std::string& out) {
  out += Json(s).dump();
}

inline void dump17(const Json& j, std::string& out, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_string(it.key(), out);
        out += indent < 0 ? ":" : ": ";
        dump17(it.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool nested = false;
      for (const auto& v : j) nested = nested || v.is_structured();
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += (indent < 0 || nested) ? "," : ", ";
        first = false;
        if (nested) {
          newline(depth + 1);
          dump17(v, out, indent, depth + 1);
        } else {
          dump17(v, out, -1, 0);
        }
      }
      if (nested) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format17(x) : "null";
      return;
    }
    default: out += j.dump(); return;
  }
}
}  // namespace detail

/// Objects are indented by `indent` spaces per level; arrays of scalars stay
/// on one line.
inline std::string dump17(const Json& j, int indent = 2) {
  std::string out;
  detail::dump17(j, out, indent, 0);
  return out;
}

inline Json to_json(const Vec3L& v) { return Json::array({v.x1, v.x2, v.x3}); }

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["grid"] = r.grid;
  j["residuals"] = r.residuals;
  j["max_residual"] = r.max_residual;
  j["mean_residual"] = r.mean_residual;
  j["tolerance"] = r.tolerance;
  j["verdict"] = to_string(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.diagnostics.empty()) {
    Json d = Json::object();
    for (const auto& [k, v] : r.diagnostics) d[k] = v;
    j["diagnostics"] = d;
  }
  return j;
}

inline Json to_json(const FrenetFrame& f) {
  Json j;
  j["kind"] = to_string(f.kind);
  j["T"] = to_json(f.T);
  j["N"] = to_json(f.N);
  j["B"] = to_json(f.B);
  j["kappa"] = f.kappa;
  j["tau"] = f.tau;
  j["epsilon"] = f.epsilon();
  j["gram_defect"] = gram_defect(f);
  return j;
}

}  // namespace mannheim
