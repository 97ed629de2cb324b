#include "lamina/report.hpp"

#include <sstream>

#include <json.hpp>

namespace lamina {

std::string to_json_string(const SuiteReport& report) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& viol : c.violations)
      v.push_back({{"inputs", viol.inputs}, {"lhs", viol.lhs}, {"rhs", viol.rhs}});
    nlohmann::json entry = {{"name", c.name}, {"samples", c.samples}, {"violations", v}};
    if (!c.note.empty()) entry["note"] = c.note;
    j.push_back(entry);
  }
  return j.dump(2);
}

std::string to_csv_string(const SuiteReport& report) {
  std::ostringstream os;
  os << "check,samples,violations,note\n";
  for (const auto& c : report.checks)
    os << c.name << "," << c.samples << "," << c.violations.size() << "," << c.note << "\n";
  return os.str();
}

}  // namespace lamina
