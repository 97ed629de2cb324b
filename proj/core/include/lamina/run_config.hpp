#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lamina/field.hpp"

namespace lamina {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command {
  lengths,
  periods,
  cr_axioms,
  atom_scan,
  barycenter_check,
  reproduce_strubel,
};

Command parse_command(const std::string& s);
std::string command_name(Command c);

struct RepresentationSpec {
  std::string kind;  // "strubel_unipotent" | "sl2" | "explicit"
  std::string alpha; // rational literal or "sqrt2-1" style surd keyword
  nlohmann::json raw;  // kept for explicit matrices
};

struct OutputSpec {
  std::string path;    // empty = stdout
  std::string format;  // "csv" | "json"
};

// Schema-validated batch configuration; unknown keys are rejected and the
// seed is mandatory whenever a sampled suite is requested.
struct RunConfig {
  FieldPtr field;
  RepresentationSpec representation;
  std::vector<std::string> words;       // explicit list, already parsed strings
  std::optional<int> enumerate_max_len; // alternative word source
  std::vector<Command> commands;
  OutputSpec output;
  std::optional<std::uint64_t> seed;
  int samples = 200;
  int depth = 3;
  int basepoints = 3;

  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig from_file(const std::string& path);
};

// "1/4" -> rational alpha; "sqrt(d)" with shifts: "u+w*sqrt(d)" limited
// grammar for surds, e.g. "sqrt(2)-1"
Alpha parse_alpha(const std::string& s);

}  // namespace lamina
