#include "lamina/run_config.hpp"

#include <fstream>
#include <set>

namespace lamina {

Command parse_command(const std::string& s) {
  if (s == "lengths") return Command::lengths;
  if (s == "periods") return Command::periods;
  if (s == "cr-axioms") return Command::cr_axioms;
  if (s == "atom-scan") return Command::atom_scan;
  if (s == "barycenter-check") return Command::barycenter_check;
  if (s == "reproduce-strubel") return Command::reproduce_strubel;
  throw ConfigError("unknown command: " + s);
}

std::string command_name(Command c) {
  switch (c) {
    case Command::lengths: return "lengths";
    case Command::periods: return "periods";
    case Command::cr_axioms: return "cr-axioms";
    case Command::atom_scan: return "atom-scan";
    case Command::barycenter_check: return "barycenter-check";
    case Command::reproduce_strubel: return "reproduce-strubel";
  }
  return "?";
}

Alpha parse_alpha(const std::string& s) {
  // limited grammar: "p/q" | "sqrt(d)" | "sqrt(d)+p/q" | "sqrt(d)-p/q"
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return Alpha::rational(parse_rational(s));
  auto close = s.find(')', pos);
  if (close == std::string::npos) throw ConfigError("bad alpha literal: " + s);
  unsigned long d = std::stoul(s.substr(pos + 5, close - pos - 5));
  Rational shift(0);
  std::string rest = s.substr(close + 1);
  std::string head = s.substr(0, pos);
  if (!rest.empty()) {
    if (rest[0] != '+' && rest[0] != '-') throw ConfigError("bad alpha literal: " + s);
    shift += parse_rational(rest);
  }
  if (!head.empty()) {
    // forms like "1+" or "-2+" before sqrt
    if (head.back() != '+' && head.back() != '-') throw ConfigError("bad alpha literal: " + s);
    const bool neg = head.back() == '-';
    std::string lead = head.substr(0, head.size() - 1);
    if (!lead.empty()) shift += parse_rational(lead);
    if (neg) return Alpha::surd(shift, Rational(-1), d);
  }
  return Alpha::surd(shift, Rational(1), d);
}

namespace {

void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
}

}  // namespace

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a json object");
  reject_unknown_keys(j,
                      {"field", "representation", "words", "enumerate_max_len", "commands",
                       "output", "seed", "samples", "depth", "basepoints"},
                      "config");
  RunConfig cfg;

  if (!j.contains("representation")) throw ConfigError("config needs a representation");
  const auto& rj = j.at("representation");
  reject_unknown_keys(rj, {"kind", "alpha", "n", "c1", "c3"}, "representation");
  cfg.representation.kind = rj.at("kind").get<std::string>();
  if (cfg.representation.kind != "strubel_unipotent" && cfg.representation.kind != "sl2" &&
      cfg.representation.kind != "explicit")
    throw ConfigError("unknown representation kind: " + cfg.representation.kind);
  cfg.representation.alpha = rj.value("alpha", std::string("0"));
  cfg.representation.raw = rj;

  Rational precision_units(48);
  Backend backend = Backend::exact;
  Alpha alpha = parse_alpha(cfg.representation.alpha);
  if (j.contains("field")) {
    const auto& fj = j.at("field");
    reject_unknown_keys(fj, {"alpha", "default_precision", "backend"}, "field");
    if (fj.contains("alpha")) {
      Alpha field_alpha = parse_alpha(fj.at("alpha").get<std::string>());
      if (rj.contains("alpha") && !(field_alpha == alpha))
        throw ConfigError("field.alpha and representation.alpha disagree");
      alpha = field_alpha;
    }
    if (fj.contains("default_precision"))
      precision_units = parse_rational(fj.at("default_precision").get<std::string>());
    if (fj.contains("backend")) {
      const std::string b = fj.at("backend").get<std::string>();
      if (b == "exact")
        backend = Backend::exact;
      else if (b == "hybrid")
        backend = Backend::hybrid;
      else
        throw ConfigError("unknown backend: " + b);
    }
  }
  cfg.field = make_field(alpha, precision_units, backend);

  if (j.contains("words")) {
    for (const auto& w : j.at("words")) cfg.words.push_back(w.get<std::string>());
  }
  if (j.contains("enumerate_max_len")) cfg.enumerate_max_len = j.at("enumerate_max_len").get<int>();

  if (!j.contains("commands")) throw ConfigError("config needs a command list");
  for (const auto& c : j.at("commands")) cfg.commands.push_back(parse_command(c.get<std::string>()));

  if (j.contains("output")) {
    const auto& oj = j.at("output");
    reject_unknown_keys(oj, {"path", "format"}, "output");
    cfg.output.path = oj.value("path", std::string());
    cfg.output.format = oj.value("format", std::string("csv"));
    if (cfg.output.format != "csv" && cfg.output.format != "json")
      throw ConfigError("unknown output format: " + cfg.output.format);
  } else {
    cfg.output.format = "csv";
  }

  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.samples = j.value("samples", 200);
  cfg.depth = j.value("depth", 3);
  cfg.basepoints = j.value("basepoints", 3);

  const bool sampled = std::any_of(cfg.commands.begin(), cfg.commands.end(), [](Command c) {
    return c == Command::cr_axioms || c == Command::atom_scan || c == Command::barycenter_check;
  });
  if (sampled && !cfg.seed) throw ConfigError("seed is mandatory for sampled suites");
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return from_json(j);
}

}  // namespace lamina
