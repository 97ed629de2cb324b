#pragma once

#include <string>
#include <vector>

namespace lamina {

// One per-check record of a verification suite: how many samples ran and
// which of them violated the checked identity.
struct CheckReport {
  struct Violation {
    std::string inputs;
    std::string lhs;
    std::string rhs;
  };
  std::string name;
  long samples = 0;
  std::vector<Violation> violations;
  std::string note;

  bool passed() const { return violations.empty(); }
};

struct SuiteReport {
  std::vector<CheckReport> checks;

  long total_violations() const {
    long n = 0;
    for (const auto& c : checks) n += static_cast<long>(c.violations.size());
    return n;
  }
  bool passed() const { return total_violations() == 0; }
};

std::string to_json_string(const SuiteReport& report);
std::string to_csv_string(const SuiteReport& report);

}  // namespace lamina
