#pragma once

#include <optional>
#include <string>
#include <vector>

#include "saftwave/params.hpp"

namespace saftwave::cli {

struct CheckResult {
  std::string name;
  double defect;
  double tolerance;
  bool pass;
};

/// Every invariant suite under `params`, in a fixed order. A suite that
/// throws is reported with an infinite defect.
std::vector<CheckResult> run_checks(const SaftParams& params,
                                    std::optional<double> tolerance_override);

/// JSON report: params, one object per suite, and the overall verdict.
std::string check_report(const SaftParams& params,
                         const std::vector<CheckResult>& results);

}  // namespace saftwave::cli
