#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellsol/verifier.hpp"

namespace ellsol::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything a run needs. Flags override file values, file values override
// the defaults below.
struct RunConfig {
  double g2 = 0.3;
  double g3 = 0.7;
  std::vector<double> deltas{-0.02, 0.04};
  std::optional<double> b;
  GridSpec grid;
  SuiteTolerances tolerances;
  std::string out_dir = ".";
};

// Tiny INI-style reader: `key = value` lines, optional [grid] and
// [tolerances] sections, # starts a comment. Unknown keys are errors so a
// typo cannot silently fall back to a default.
RunConfig load_config(const std::string& path);

void apply_line(RunConfig& cfg, std::string& section, const std::string& line,
                const std::string& where);

// Flag-level overrides sharing the file grammar.
void apply_param(RunConfig& cfg, const std::string& kv);      // top-level key=value
void apply_grid(RunConfig& cfg, const std::string& triple);   // min,max,n
void apply_tolerance(RunConfig& cfg, const std::string& kv);  // name=value

}  // namespace ellsol::cli
