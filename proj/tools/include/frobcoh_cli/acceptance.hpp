#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace frobcoh::cli {

struct AcceptanceOptions {
  bool deep = false;            // chain identities on qpoly:i and s3alt too
  std::uint64_t seed = 20260;   // property suites
  std::size_t cases = 200;      // per property suite
};

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> details;        // one line per failed sub-check
  std::vector<std::string> discrepancies;  // structured reports that do not fail the criterion
};

/// Runs the seven acceptance criteria. `progress` (optional) is called with
/// each result as soon as it is known.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& progress = {});

/// "PASS  3  cohomology regression" followed by indented detail lines.
std::string format_criterion(const CriterionResult& r);

}  // namespace frobcoh::cli
