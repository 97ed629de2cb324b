#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "lamina/runner.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact crossratio, length and Siegel-distance computations for maximal framed "
               "representations"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::optional<std::uint64_t> seed_override;
  auto* run = app.add_subcommand("run", "execute the commands of a json config");
  run->add_option("config", config_path, "path to the run configuration")->required();
  run->add_option("--seed", seed_override, "override the config seed");
  run->add_option("--out", out_path, "override the output path");

  auto* reproduce = app.add_subcommand("reproduce", "reproduce published tables");
  std::string alphas_csv = "0,1/4,1/2";
  std::string rep_out;
  auto* strubel = reproduce->add_subcommand("strubel", "valuation table of the unipotent family");
  strubel->add_option("--alpha", alphas_csv, "comma-separated alpha values");
  strubel->add_option("--out", rep_out, "write the table to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      lamina::RunConfig cfg = lamina::RunConfig::from_file(config_path);
      if (seed_override) cfg.seed = *seed_override;
      if (!out_path.empty()) cfg.output.path = out_path;
      lamina::RunResult res = lamina::execute(cfg);
      if (cfg.output.path.empty()) std::cout << res.output;
      return res.exit_code;
    }
    if (strubel->parsed()) {
      std::vector<lamina::Alpha> alphas;
      for (const auto& s : split_commas(alphas_csv))
        if (!s.empty()) alphas.push_back(lamina::parse_alpha(s));
      auto rows = lamina::reproduce_strubel(alphas);
      std::string table = lamina::render_strubel_rows(rows);
      if (!rep_out.empty()) {
        std::ofstream out(rep_out);
        out << table;
      } else {
        std::cout << table;
      }
      for (const auto& r : rows)
        if (!r.match) return 1;
      return 0;
    }
    std::cerr << "no subcommand\n";
    return 3;
  } catch (const lamina::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
