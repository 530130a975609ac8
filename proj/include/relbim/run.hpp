#pragma once
// Front-door dispatch: run the requested verification suites over a parsed
// presentation and assemble a deterministic report.

#include <json.hpp>

#include <optional>
#include <string>

namespace relbim {

struct RunConfig {
  std::string input_path;
  std::string command = "all";  // graded | squier | cayley | all
  int max_degree = 8;
  int max_length = 8;
  bool json = false;
  std::optional<std::string> table_path;
};

// exit codes: 0 all checks pass and certified; 1 a mathematical check failed;
// 2 input or usage error; 3 only uncertified outcomes (truncated slices or a
// non-stabilized enumeration)
struct RunResult {
  int exit_code = 0;
  std::string text;       // human-readable report
  nlohmann::json report;  // machine-readable report ("schema": 1)
};

RunResult run(const RunConfig& config);

// same as run() but with the presentation source (and optional table source)
// supplied directly; used by tests
RunResult run_on_source(const std::string& source, const RunConfig& config,
                        const std::optional<std::string>& table_source = std::nullopt);

}  // namespace relbim
