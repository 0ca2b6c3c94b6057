#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "omrs_cli/run.hpp"

namespace {

// Write to a sibling temporary, then rename over the target.
bool write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) return false;
    f << text;
    if (!f) return false;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace omrs::cli;
  CLI::App app{"Oriented matroid root systems: enumeration and verification"};
  std::string command, config_path, out_path, svg_path;
  std::optional<int> depth;
  std::optional<std::uint64_t> seed;
  app.add_option("command", command, "roots | topes | biclosed | clean | verify-omrs | verify-finite | induct | "
                                     "compare | xsection")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--config", config_path, "key-value config file")->required()->check(CLI::ExistingFile);
  app.add_option("--depth", depth, "root depth bound (overrides the config)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for sampled checks (overrides the config)");
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  app.add_option("--svg", svg_path, "write the cross-section figure here (xsection)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfigError;
  }

  std::ifstream in(config_path);
  std::stringstream text;
  text << in.rdbuf();
  JobConfig cfg;
  try {
    cfg = parse_config(text.str());
    if (!cfg.command.empty() && cfg.command != command) {
      throw ConfigError({"config command '" + cfg.command + "' differs from '" + command + "'"});
    }
    cfg.command = command;
    if (depth) cfg.depth = *depth;
    if (seed) cfg.seed = *seed;
    if (!out_path.empty()) cfg.out = out_path;
    if (!svg_path.empty()) cfg.svg = svg_path;
    RunOutput result = run(cfg);
    const std::string json = emit_report(result.doc);
    if (cfg.out) {
      if (!write_atomically(*cfg.out, json)) {
        std::cerr << "omrs: cannot write " << *cfg.out << "\n";
        return kConfigError;
      }
    } else {
      std::cout << json;
    }
    if (cfg.svg && result.svg && !write_atomically(*cfg.svg, *result.svg)) {
      std::cerr << "omrs: cannot write " << *cfg.svg << "\n";
      return kConfigError;
    }
    return exit_code(result);
  } catch (const ConfigError& e) {
    for (const auto& err : e.errors()) std::cerr << "omrs: config: " << err << "\n";
    return kConfigError;
  }
}
