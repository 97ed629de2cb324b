#pragma once

#include "lamina/oracle.hpp"
#include "lamina/run_config.hpp"

namespace lamina {

struct RunResult {
  int exit_code = 0;     // 0 pass, 1 violations, 2 computation error, 3 config error
  std::string output;    // rendered tables / reports
};

// Executes every command of the config in order and concatenates the
// rendered sections.  Deterministic for a fixed config and seed.
RunResult execute(const RunConfig& cfg);

struct StrubelRow {
  std::string alpha;
  std::string computed_c1inv_c3;
  std::string expected_c1inv_c3;
  std::string computed_c1inv_c2;
  std::string expected_c1inv_c2;
  bool match = false;
};

// v(T(rho_alpha(c1^-1 c3))) and v(T(rho_alpha(c1^-1 c2))) against the
// closed-form minima, one row per alpha
std::vector<StrubelRow> reproduce_strubel(const std::vector<Alpha>& alphas);
std::string render_strubel_rows(const std::vector<StrubelRow>& rows);

Representation build_representation(const RunConfig& cfg);
std::vector<GroupWord> collect_words(const RunConfig& cfg);

}  // namespace lamina
