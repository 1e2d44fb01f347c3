#pragma once

#include <map>
#include <string>
#include <vector>

namespace bogauge {

/// pass = value <relation> threshold, with relation one of "<=", ">=", "=="
/// or "in" (threshold <= value <= threshold_hi).
struct Verdict {
  bool pass = false;
  double value = 0.0;
  std::string relation = "<=";
  double threshold = 0.0;
  double threshold_hi = 0.0;  // only for "in"

  static Verdict at_most(double value, double threshold);
  static Verdict at_least(double value, double threshold);
  static Verdict within(double value, double lo, double hi);
  static Verdict holds(bool ok);

  /// Recompute pass from value and thresholds.
  bool evaluate() const;
};

struct ExperimentReport {
  std::string kind;
  std::string config_json;  // canonical config echo
  std::map<std::string, double> results;
  std::map<std::string, std::vector<double>> series;  // "t" holds snapshot times
  std::map<std::string, Verdict> verdicts;
  std::map<std::string, std::string> notes;
  bool numerical_failure = false;
  std::string failure;
  double wall_seconds = 0.0;
  std::string version;

  bool pass() const;

  std::string to_json() const;
  static ExperimentReport from_json(const std::string& text);

  void write(const std::string& path) const;
  /// CSV with header "t,<name>" and one row per snapshot.
  void write_csv(const std::string& name, const std::string& path) const;
};

/// Shortest decimal string that reads back to the same double, always with
/// '.' as the decimal separator.
std::string format_double(double v);

}  // namespace bogauge
