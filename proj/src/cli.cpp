#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "bogauge/errors.hpp"
#include "bogauge/experiments.hpp"

namespace bogauge {

namespace {

// report.json -> report.<name>.csv
std::string csv_path(const std::string& report_path, const std::string& name) {
  std::filesystem::path p(report_path);
  p.replace_extension();
  return p.string() + "." + name + ".csv";
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Benjamin-Ono pseudospectral solver and gauge/envelope experiment harness",
               "bogauge"};
  std::string kind, config_path, out_path;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  app.add_option("kind", kind, "Experiment kind")
      ->required()
      ->check(CLI::IsMember(experiment_kinds()));
  app.add_option("--config", config_path, "JSON configuration file")->required();
  app.add_option("--out", out_path, "Report path (overrides output.path)");
  app.add_option("--seed", seed, "RNG seed (overrides data.seed)");
  app.add_flag("--quiet", quiet, "Suppress the verdict summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "bogauge: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  ExperimentConfig cfg;
  try {
    cfg = ExperimentConfig::load(config_path);
    if (cfg.kind != kind)
      throw ConfigError("kind", "config declares '" + cfg.kind + "' but the command is '" + kind + "'");
    if (seed) cfg.data.seed = *seed;
    if (!out_path.empty()) cfg.output.path = out_path;
  } catch (const ConfigError& e) {
    std::cerr << "bogauge: config error: " << e.what() << '\n';
    return 2;
  }

  ExperimentReport rep;
  try {
    rep = run_experiment(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "bogauge: config error: " << e.what() << '\n';
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "bogauge: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "bogauge: numerical failure: " << e.what() << '\n';
    return 3;
  }

  try {
    rep.write(cfg.output.path);
    for (const auto& name : cfg.output.fields) rep.write_csv(name, csv_path(cfg.output.path, name));
  } catch (const ConfigError& e) {
    std::cerr << "bogauge: output error: " << e.what() << '\n';
    return 2;
  }

  if (!quiet) {
    int passed = 0;
    std::string failed;
    for (const auto& [name, v] : rep.verdicts) {
      if (v.pass) ++passed;
      else failed += (failed.empty() ? "" : ",") + name;
    }
    std::cout << kind << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << passed << "/"
              << rep.verdicts.size() << " verdicts)";
    if (!failed.empty()) std::cout << " failed=" << failed;
    if (rep.numerical_failure) std::cout << " numerical_failure";
    std::cout << " report=" << cfg.output.path << '\n';
  }
  if (rep.numerical_failure) return 3;
  return rep.pass() ? 0 : 1;
}

}  // namespace bogauge
