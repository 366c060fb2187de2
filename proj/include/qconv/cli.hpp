#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qconv/types.hpp"

namespace qconv::cli {

// Exit codes: 0 = all checked properties hold, 1 = a property was
// violated (the report names it), 2 = malformed input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitBadInput = 2;

struct RunConfig {
  std::string command;  // conv | corr | qft-check | reduction |
                        // nogo-analytic | nogo-search | postselect-scan
  std::uint64_t seed = 1;
  int n = 4;
  double tol = 0.0;  // 0 means: use the command's pinned default
  long trials = 10000;
  int restarts = 50;
  int budget = 200;
  int ancilla_dim = 1;
  int samples = 1000;                  // nogo-analytic surface samples
  std::string family = "uniform";      // postselect-scan
  std::string n_range;                 // postselect-scan, "1..10" or "6"
  std::string probe_set = "standard-v1";
  std::string probe_config;            // optional probe-set JSON path
  std::string format = "json";         // csv | json
  std::vector<std::string> inputs;
  std::string output;
};

/// Runs one command. The JSON report goes to `out`; diagnostics to `err`.
/// Reports are byte-identical for identical config + seed apart from the
/// wall_time_ms field.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full argv front end: CLI11 parsing, config-file merge (flags override
/// the file), then run().
int main_entry(int argc, char** argv);

}  // namespace qconv::cli
