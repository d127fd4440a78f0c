#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hullfn::cli {

/// One report line. Rows without a pass verdict are informational and never
/// affect the exit code.
struct CheckRow {
  std::string name;
  double value = 0.0;
  std::optional<double> tolerance;
  std::optional<bool> pass;
};

struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckRow> rows;
  std::vector<std::string> artifacts;

  bool all_pass() const;
};

/// Header name,value,tolerance,pass then one line per row.
std::string to_csv(const RunReport& report);
std::string to_json(const RunReport& report);

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 usage or input error, 2 a check failed.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hullfn::cli
