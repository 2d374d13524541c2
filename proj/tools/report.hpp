#pragma once

#include <optional>
#include <string>
#include <vector>

#include "output.hpp"
#include "rootlab/monodromy.hpp"
#include "rootlab/stability.hpp"
#include "rootlab/tracker.hpp"

namespace rootlab::cli {

Json loop_json(const monodromy::LoopPermutation& lp);
Json certificate_json(const monodromy::BranchCertificate& cert);
Json bound_json(const stability::BoundReport& rep);
Json trajectory_summary_json(const CoefficientPath& path, const TrajectoryBundle& b);
std::string trajectory_csv(const TrajectoryBundle& b);

struct RecheckResult {
  bool consistent = false;  // every recorded pass flag and the verdict agree with the margins
  monodromy::Verdict verdict = monodromy::Verdict::Inconclusive;
  std::vector<std::string> mismatches;
  std::optional<std::string> failing_check;
};

// Recomputes pass/fail of a certificate document from its recorded margins.
// Throws InvalidInput on a malformed document.
RecheckResult recheck_certificate(const Json& doc);

}  // namespace rootlab::cli
