#pragma once

// Curve CSV exchange (header t,x1,x2,x3) and curves interpolated from
// samples.

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mannheim/curve.hpp"

namespace mannheim {

/// %.17g, enough to read back the same double.
inline std::string format17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_csv(std::ostream& out, const CurveSamples& s) {
  out << "t,x1,x2,x3\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vec3L& p = s.points[i];
    out << format17(s.parameters[i]) << ',' << format17(p.x1) << ',' << format17(p.x2) << ','
        << format17(p.x3) << '\n';
  }
}

inline void write_csv_file(const std::string& path, const CurveSamples& s) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::Io, "cannot open " + path + " for writing");
  write_csv(f, s);
  if (!f) fail(ErrorCode::Io, "write to " + path + " failed");
}

namespace detail {
inline double parse_field(const std::string& text, std::size_t line) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    fail(ErrorCode::Io, "bad number '" + text + "' on line " + std::to_string(line));
  }
  return v;
}
}  // namespace detail

inline CurveSamples read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::Io, "empty curve CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,x1,x2,x3") fail(ErrorCode::Io, "curve CSV header must be t,x1,x2,x3");
  CurveSamples s;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4) {
      fail(ErrorCode::Io, "expected 4 fields on line " + std::to_string(number));
    }
    const double t = detail::parse_field(fields[0], number);
    if (!s.parameters.empty() && !(t > s.parameters.back())) {
      fail(ErrorCode::Io, "parameters must increase strictly (line " + std::to_string(number) + ")");
    }
    s.parameters.push_back(t);
    s.points.push_back({detail::parse_field(fields[1], number), detail::parse_field(fields[2], number),
                        detail::parse_field(fields[3], number)});
  }
  return s;
}

inline CurveSamples read_csv_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::Io, "cannot open " + path);
  return read_csv(f);
}

/// Curve through the samples. Near t the curve is the degree-5 polynomial
/// through the six closest samples, so derivatives up to order 5 exist
/// (piecewise) and positions at sample parameters are reproduced exactly.
inline Curve samples_curve(std::string label, CurveSamples samples) {
  static constexpr std::size_t kWindow = 6;
  if (samples.size() < 2) fail(ErrorCode::InvalidArgument, "need at least 2 samples");
  auto data = std::make_shared<const CurveSamples>(std::move(samples));
  const Interval domain{data->parameters.front(), data->parameters.back()};

  auto window = [data](double t) {
    const auto& p = data->parameters;
    const std::size_t w = std::min(kWindow, p.size());
    const auto it = std::upper_bound(p.begin(), p.end(), t);
    std::size_t i = it == p.begin() ? 0 : static_cast<std::size_t>(it - p.begin()) - 1;
    std::size_t first = i >= (w - 1) / 2 ? i - (w - 1) / 2 : 0;
    first = std::min(first, p.size() - w);
    return std::pair{first, w};
  };

  auto jet = [data, window](double t, int order) {
    const auto [first, w] = window(t);
    std::vector<double> nodes(data->parameters.begin() + static_cast<std::ptrdiff_t>(first),
                              data->parameters.begin() + static_cast<std::ptrdiff_t>(first + w));
    VecSeries r(order);
    double fact = 1.0;
    const int top = std::min(order, static_cast<int>(w) - 1);
    for (int k = 0; k <= top; ++k) {
      if (k > 0) fact *= k;
      const auto wts = fd_weights(t, nodes, k);
      Vec3L acc;
      for (std::size_t i = 0; i < w; ++i) acc += wts[i] * data->points[first + i];
      r[k] = acc / fact;
    }
    return r;
  };
  auto position = [data, jet](double t) {
    const auto& p = data->parameters;
    const auto it = std::lower_bound(p.begin(), p.end(), t);
    if (it != p.end() && *it == t) return data->points[static_cast<std::size_t>(it - p.begin())];
    return jet(t, 0)[0];
  };
  return Curve::from_jet(std::move(label), domain, jet, position);
}

}  // namespace mannheim
