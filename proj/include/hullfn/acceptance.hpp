#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hullfn {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs every acceptance criterion, printing one PASS/FAIL line per
/// criterion to `log` as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream& log);

}  // namespace hullfn
