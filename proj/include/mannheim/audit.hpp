#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mannheim/indicatrix.hpp"

namespace mannheim {

/// Runs every verifier over one sampled pair. A verifier that throws turns
/// into a Fail report carrying the error text.
inline std::vector<VerificationReport> verify_all(const PairData& d, const VerifyOptions& o = {}) {
  using Verifier = std::function<VerificationReport(const PairData&, const VerifyOptions&)>;
  const std::vector<std::pair<std::string, Verifier>> verifiers = {
      {"mannheim_residual", mannheim_residual_report},
      {"distance", verify_distance},
      {"torsion_relation", verify_torsion_relation},
      {"linear_relation", verify_linear_relation},
      {"frame_relations", verify_frame_relations},
      {"torsion_square", verify_torsion_square},
      {"curvature_center_ratio", verify_ratio_nonconstant},
      {"indicatrix_relations", verify_indicatrix_relations},
  };
  std::vector<VerificationReport> out;
  for (const auto& [name, verify] : verifiers) {
    try {
      out.push_back(verify(d, o));
    } catch (const Error& e) {
      VerificationReport r = make_report(name, d.grid(), {}, 0.0, false);
      r.verdict = Verdict::Fail;
      r.note = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline std::vector<VerificationReport> verify_pair(const MannheimPair& pair, int grid,
                                                   const VerifyOptions& o = {}) {
  return verify_all(sample_pair(pair, grid), o);
}

}  // namespace mannheim
