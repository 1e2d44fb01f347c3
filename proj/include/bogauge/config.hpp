#pragma once

#include <map>
#include <string>
#include <vector>

#include "bogauge/data.hpp"
#include "bogauge/solver.hpp"

namespace bogauge {

/// Experiment kinds accepted by the CLI and by ExperimentConfig::kind.
const std::vector<std::string>& experiment_kinds();

/// Thresholds used by each kind, with their defaults.
std::map<std::string, double> default_thresholds(const std::string& kind);

struct AnalysisConfig {
  double s0 = 1.0;
  double sigma = 0.05;
  int bigM = 0;          // 0: ceil(s0) + 1
  double epsilon = 0.0;  // 0: eps^2 = max(||u0||_{H^1}, 1e-8)
  int padding = 4;
  /// Number of seeded pairs (lipschitz, paraproduct).
  int pairs = 100;
  /// Perturbation size for lipschitz pairs.
  double delta = 1e-3;
  /// Grid sizes swept by gauge-check, paraproduct and converge.
  std::vector<int> sizes;
  /// Envelope runs: repeat with dt/2 and 2n and compare.
  bool refine = true;
  std::map<std::string, double> thresholds;

  int resolved_bigM() const;
};

struct OutputConfig {
  std::string path = "report.json";
  /// Series to export as CSV next to the report.
  std::vector<std::string> fields;
};

struct ExperimentConfig {
  std::string kind = "solve";
  SolverConfig solver;  // solver.grid holds grid.n and grid.length
  DataSpec data;
  /// Scaling u -> u(x/lambda)/lambda applied to the datum before the run.
  double rescale = 1.0;
  AnalysisConfig analysis;
  OutputConfig output;

  /// Parse a JSON document. Unknown keys, wrong types and out-of-range values
  /// raise ConfigError naming the field.
  static ExperimentConfig parse(const std::string& json_text);
  static ExperimentConfig load(const std::string& path);

  /// Re-validate after programmatic edits.
  void validate() const;

  /// Canonical JSON with every default filled in.
  std::string to_json() const;
};

}  // namespace bogauge
