#pragma once

// Self-contained verification suite behind the `verify` subcommand: oracle
// equivalences, algebra residuals, gradient checks, invariant drift and
// Mathieu limits, each reporting its worst measured residual.

#include <functional>
#include <string>
#include <vector>

#include "squeezetrap/coherent.hpp"

namespace squeezetrap {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double threshold = 0.0;
  std::string detail;
};

// Injection points for mutation tests: the oracle comparisons read the
// closed-form moments through this hook.
struct VerifyHooks {
  std::function<double(int, const ModeLabels&)> husimi;
  VerifyHooks();
};

// Runs every check whose name contains `filter` (empty: all), distributing
// sample sweeps over `threads` workers.  Thread count never changes
// results.
std::vector<CheckResult> run_verification(const std::string& filter = "",
                                          int threads = 0,
                                          const VerifyHooks& hooks = {});

}  // namespace squeezetrap
