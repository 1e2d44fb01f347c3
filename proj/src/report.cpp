#include "bogauge/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "bogauge/errors.hpp"
#include "json.hpp"

namespace bogauge {

using nlohmann::json;

namespace {

// Non-finite doubles are written as null.
double number_or_nan(const json& x) {
  return x.is_null() ? std::nan("") : x.get<double>();
}

}  // namespace

Verdict Verdict::at_most(double value, double threshold) {
  Verdict v{false, value, "<=", threshold, 0.0};
  v.pass = v.evaluate();
  return v;
}

Verdict Verdict::at_least(double value, double threshold) {
  Verdict v{false, value, ">=", threshold, 0.0};
  v.pass = v.evaluate();
  return v;
}

Verdict Verdict::within(double value, double lo, double hi) {
  Verdict v{false, value, "in", lo, hi};
  v.pass = v.evaluate();
  return v;
}

Verdict Verdict::holds(bool ok) {
  Verdict v{false, ok ? 1.0 : 0.0, "==", 1.0, 0.0};
  v.pass = v.evaluate();
  return v;
}

bool Verdict::evaluate() const {
  if (relation == "<=") return value <= threshold;
  if (relation == ">=") return value >= threshold;
  if (relation == "==") return value == threshold;
  if (relation == "in") return value >= threshold && value <= threshold_hi;
  return false;
}

bool ExperimentReport::pass() const {
  if (numerical_failure) return false;
  for (const auto& [k, v] : verdicts)
    if (!v.pass) return false;
  return true;
}

std::string ExperimentReport::to_json() const {
  json j;
  j["kind"] = kind;
  j["config"] = config_json.empty() ? json::object() : json::parse(config_json);
  j["results"] = results;
  j["series"] = series;
  json v = json::object();
  for (const auto& [name, d] : verdicts) {
    json e = {{"pass", d.pass}, {"value", d.value}, {"relation", d.relation}, {"threshold", d.threshold}};
    if (d.relation == "in") e["threshold_hi"] = d.threshold_hi;
    v[name] = e;
  }
  j["verdicts"] = v;
  j["notes"] = notes;
  j["numerical_failure"] = numerical_failure;
  if (!failure.empty()) j["failure"] = failure;
  j["pass"] = pass();
  j["meta"] = {{"version", version}, {"wall_seconds", wall_seconds}};
  return j.dump(2);
}

ExperimentReport ExperimentReport::from_json(const std::string& text) {
  const json j = json::parse(text);
  ExperimentReport r;
  r.kind = j.at("kind").get<std::string>();
  r.config_json = j.at("config").dump(2);
  for (const auto& [name, x] : j.at("results").items()) r.results[name] = number_or_nan(x);
  for (const auto& [name, xs] : j.at("series").items()) {
    auto& dst = r.series[name];
    for (const auto& x : xs) dst.push_back(number_or_nan(x));
  }
  for (const auto& [name, e] : j.at("verdicts").items()) {
    Verdict d;
    d.pass = e.at("pass").get<bool>();
    d.value = number_or_nan(e.at("value"));
    d.relation = e.at("relation").get<std::string>();
    d.threshold = e.at("threshold").get<double>();
    if (e.contains("threshold_hi")) d.threshold_hi = e.at("threshold_hi").get<double>();
    r.verdicts[name] = d;
  }
  r.notes = j.at("notes").get<std::map<std::string, std::string>>();
  r.numerical_failure = j.at("numerical_failure").get<bool>();
  if (j.contains("failure")) r.failure = j.at("failure").get<std::string>();
  r.version = j.at("meta").at("version").get<std::string>();
  r.wall_seconds = j.at("meta").at("wall_seconds").get<double>();
  return r;
}

void ExperimentReport::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("output.path", "cannot write '" + path + "'");
  out << to_json() << '\n';
}

void ExperimentReport::write_csv(const std::string& name, const std::string& path) const {
  auto it = series.find(name);
  if (it == series.end()) throw ConfigError("output.fields", "no series named '" + name + "'");
  auto t = series.find("t");
  if (t == series.end() || t->second.size() != it->second.size())
    throw ConfigError("output.fields", "series '" + name + "' is not aligned with snapshot times");
  std::ofstream out(path);
  if (!out) throw ConfigError("output.path", "cannot write '" + path + "'");
  out << "t," << name << '\n';
  for (std::size_t i = 0; i < it->second.size(); ++i)
    out << format_double(t->second[i]) << ',' << format_double(it->second[i]) << '\n';
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace bogauge
