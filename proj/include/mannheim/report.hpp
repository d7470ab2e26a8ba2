#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace mannheim {

enum class Verdict { Pass, Fail, Reported };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Reported: return "Reported";
  }
  return "?";
}

/// Residual profile of one identity over a parameter grid.
struct VerificationReport {
  std::string identity;
  std::vector<double> grid;
  std::vector<double> residuals;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Reported;
  std::string note;
  /// Extra named scalars (mu spread, chosen alignment sign, ...).
  std::vector<std::pair<std::string, double>> diagnostics;

  double diagnostic(const std::string& name) const {
    for (const auto& [k, v] : diagnostics) {
      if (k == name) return v;
    }
    return std::nan("");
  }
};

/// Builds a report with max/mean filled in. With `judge` false the verdict
/// is Reported; otherwise Pass iff max_residual <= tolerance. A NaN residual
/// makes the maximum NaN and the verdict Fail.
inline VerificationReport make_report(std::string identity, std::vector<double> grid,
                                      std::vector<double> residuals, double tolerance,
                                      bool judge) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.grid = std::move(grid);
  r.residuals = std::move(residuals);
  r.tolerance = tolerance;
  if (!r.residuals.empty()) {
    bool nan = false;
    double mx = 0.0;
    for (double x : r.residuals) {
      if (std::isnan(x)) nan = true;
      mx = std::max(mx, x);
    }
    r.max_residual = nan ? std::nan("") : mx;
    r.mean_residual = std::accumulate(r.residuals.begin(), r.residuals.end(), 0.0) /
                      static_cast<double>(r.residuals.size());
  }
  if (judge) r.verdict = r.max_residual <= tolerance ? Verdict::Pass : Verdict::Fail;
  return r;
}

inline bool any_failed(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const auto& r) { return r.verdict == Verdict::Fail; });
}

}  // namespace mannheim
