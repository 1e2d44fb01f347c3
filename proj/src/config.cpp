#include "bogauge/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "bogauge/errors.hpp"
#include "json.hpp"

namespace bogauge {

using nlohmann::json;

namespace {

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ConfigError(where, "expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k))
      throw ConfigError(where.empty() ? k : where + "." + k, "unknown key");
}

std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
  return v;
}

long long integer(const json& j, const std::string& field) {
  const double v = number(j, field);
  if (v != std::floor(v) || std::abs(v) > 9e15) throw ConfigError(field, "expected an integer");
  return static_cast<long long>(v);
}

bool boolean(const json& j, const std::string& field) {
  if (!j.is_boolean()) throw ConfigError(field, "expected true or false");
  return j.get<bool>();
}

std::string string(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError(field, "expected a string");
  return j.get<std::string>();
}

template <class F>
void opt(const json& obj, const char* key, const std::string& where, F&& f) {
  auto it = obj.find(key);
  if (it != obj.end()) f(*it, join(where, key));
}

std::vector<double> numbers(const json& j, const std::string& field) {
  std::vector<double> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      out.push_back(number(j[i], field + "[" + std::to_string(i) + "]"));
  } else {
    out.push_back(number(j, field));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds = {"solve",    "conserve",    "gauge-check",
                                                 "lipschitz", "envelope",   "paraproduct",
                                                 "converge"};
  return kinds;
}

std::map<std::string, double> default_thresholds(const std::string& kind) {
  if (kind == "conserve")
    return {{"l2_drift", 1e-10}, {"ratio_min", 8.0}, {"ratio_max", 32.0}};
  if (kind == "gauge-check")
    return {{"w_residual", 1e-6},
            {"reconstruction", 1e-8},
            {"cancellation_factor", 10.0},
            {"unimodularity", 1e-12},
            {"primitive_residual", 1e-8}};
  if (kind == "lipschitz") return {{"gronwall_slack", 1e-6}, {"energy_defect", 1e-8}};
  if (kind == "envelope")
    return {{"envelope_ratio", 10.0},
            {"persistence_ratio", 10.0},
            {"band_ratio", 10.0},
            {"refinement_tolerance", 0.2}};
  if (kind == "paraproduct") return {{"cross_n_factor", 2.0}};
  if (kind == "converge")
    return {{"order_min", 3.9}, {"order_max", 4.3}, {"spectral_floor", 1e-10}, {"linear_exact", 1e-12}};
  return {};
}

int AnalysisConfig::resolved_bigM() const {
  return bigM > 0 ? bigM : static_cast<int>(std::ceil(s0)) + 1;
}

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  only_keys(root, "", {"kind", "grid", "solver", "data", "analysis", "output"});

  ExperimentConfig c;
  if (!root.contains("kind")) throw ConfigError("kind", "required");
  c.kind = string(root["kind"], "kind");
  const auto& kinds = experiment_kinds();
  if (std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end())
    throw ConfigError("kind", "unknown experiment kind '" + c.kind + "'");

  int n = 256;
  double length = 1.0;
  if (root.contains("grid")) {
    const json& g = root["grid"];
    only_keys(g, "grid", {"n", "length"});
    opt(g, "n", "grid", [&](const json& v, const std::string& f) {
      const long long x = integer(v, f);
      if (x < 2 || x % 2 != 0 || x > (1 << 24)) throw ConfigError(f, "must be an even integer >= 2");
      n = static_cast<int>(x);
    });
    opt(g, "length", "grid", [&](const json& v, const std::string& f) {
      length = number(v, f);
      if (!(length > 0.0)) throw ConfigError(f, "must be positive");
    });
  }
  c.solver.grid = PeriodicGrid(n, length);

  if (root.contains("solver")) {
    const json& s = root["solver"];
    only_keys(s, "solver",
              {"dt", "horizon", "dealias", "capture_every", "blowup_threshold", "nonlinear"});
    opt(s, "dt", "solver", [&](const json& v, const std::string& f) { c.solver.dt = number(v, f); });
    opt(s, "horizon", "solver",
        [&](const json& v, const std::string& f) { c.solver.horizon = number(v, f); });
    opt(s, "dealias", "solver",
        [&](const json& v, const std::string& f) { c.solver.dealias = boolean(v, f); });
    opt(s, "nonlinear", "solver",
        [&](const json& v, const std::string& f) { c.solver.nonlinear = boolean(v, f); });
    opt(s, "capture_every", "solver", [&](const json& v, const std::string& f) {
      const long long x = integer(v, f);
      if (x < 1 || x > (1LL << 30)) throw ConfigError(f, "must be >= 1");
      c.solver.capture_every = static_cast<int>(x);
    });
    opt(s, "blowup_threshold", "solver",
        [&](const json& v, const std::string& f) { c.solver.blowup_threshold = number(v, f); });
  }

  if (root.contains("data")) {
    const json& d = root["data"];
    only_keys(d, "data", {"family", "params", "seed", "rescale"});
    opt(d, "family", "data",
        [&](const json& v, const std::string& f) { c.data.family = string(v, f); });
    opt(d, "seed", "data", [&](const json& v, const std::string& f) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ConfigError(f, "expected a nonnegative integer");
      c.data.seed = v.get<std::uint64_t>();
    });
    opt(d, "rescale", "data", [&](const json& v, const std::string& f) { c.rescale = number(v, f); });
    opt(d, "params", "data", [&](const json& v, const std::string& f) {
      if (!v.is_object()) throw ConfigError(f, "expected an object");
      for (const auto& [k, x] : v.items()) c.data.params[k] = numbers(x, join(f, k));
    });
  }

  if (root.contains("analysis")) {
    const json& a = root["analysis"];
    only_keys(a, "analysis",
              {"s0", "sigma", "bigM", "epsilon", "padding", "pairs", "delta", "sizes", "refine",
               "thresholds"});
    auto& an = c.analysis;
    opt(a, "s0", "analysis", [&](const json& v, const std::string& f) { an.s0 = number(v, f); });
    opt(a, "sigma", "analysis", [&](const json& v, const std::string& f) { an.sigma = number(v, f); });
    opt(a, "bigM", "analysis", [&](const json& v, const std::string& f) {
      const long long x = integer(v, f);
      if (x < 1 || x > 64) throw ConfigError(f, "must be in 1..64");
      an.bigM = static_cast<int>(x);
    });
    opt(a, "epsilon", "analysis",
        [&](const json& v, const std::string& f) { an.epsilon = number(v, f); });
    opt(a, "padding", "analysis", [&](const json& v, const std::string& f) {
      const long long x = integer(v, f);
      if (x < 2 || x > 16) throw ConfigError(f, "must be in 2..16");
      an.padding = static_cast<int>(x);
    });
    opt(a, "pairs", "analysis", [&](const json& v, const std::string& f) {
      const long long x = integer(v, f);
      if (x < 1 || x > 1000000) throw ConfigError(f, "must be in 1..1000000");
      an.pairs = static_cast<int>(x);
    });
    opt(a, "delta", "analysis", [&](const json& v, const std::string& f) { an.delta = number(v, f); });
    opt(a, "refine", "analysis",
        [&](const json& v, const std::string& f) { an.refine = boolean(v, f); });
    opt(a, "sizes", "analysis", [&](const json& v, const std::string& f) {
      if (!v.is_array()) throw ConfigError(f, "expected an array (empty selects the default sweep)");
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string fi = f + "[" + std::to_string(i) + "]";
        const long long x = integer(v[i], fi);
        if (x < 4 || x % 2 != 0 || x > (1 << 22)) throw ConfigError(fi, "must be an even integer >= 4");
        an.sizes.push_back(static_cast<int>(x));
      }
    });
    opt(a, "thresholds", "analysis", [&](const json& v, const std::string& f) {
      if (!v.is_object()) throw ConfigError(f, "expected an object");
      const auto known = default_thresholds(c.kind);
      for (const auto& [k, x] : v.items()) {
        if (!known.count(k)) throw ConfigError(join(f, k), "unknown threshold for kind '" + c.kind + "'");
        an.thresholds[k] = number(x, join(f, k));
      }
    });
  }

  if (root.contains("output")) {
    const json& o = root["output"];
    only_keys(o, "output", {"path", "fields"});
    opt(o, "path", "output", [&](const json& v, const std::string& f) {
      c.output.path = string(v, f);
      if (c.output.path.empty()) throw ConfigError(f, "must not be empty");
    });
    opt(o, "fields", "output", [&](const json& v, const std::string& f) {
      if (!v.is_array()) throw ConfigError(f, "expected an array of series names");
      for (std::size_t i = 0; i < v.size(); ++i)
        c.output.fields.push_back(string(v[i], f + "[" + std::to_string(i) + "]"));
    });
  }

  // Fill thresholds not given explicitly.
  for (const auto& [k, v] : default_thresholds(c.kind)) c.analysis.thresholds.emplace(k, v);
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void ExperimentConfig::validate() const {
  const auto& s = solver;
  if (!(s.dt > 0.0)) throw ConfigError("solver.dt", "must be positive");
  if (s.horizon == 0.0) throw ConfigError("solver.horizon", "must be nonzero");
  if (!(s.blowup_threshold > 0.0)) throw ConfigError("solver.blowup_threshold", "must be positive");
  try {
    s.validate();
  } catch (const ContractError& e) {
    const std::string msg = e.what();
    const auto dot = msg.find(' ');
    throw ConfigError(msg.substr(0, dot), msg.substr(dot + 1));
  }
  data.validate();
  if (!(rescale > 0.0)) throw ConfigError("data.rescale", "must be positive");
  const auto& a = analysis;
  if (!(a.s0 >= 0.0 && a.s0 <= 8.0)) throw ConfigError("analysis.s0", "must be in [0, 8]");
  if (kind == "envelope" && a.s0 < 1.0) throw ConfigError("analysis.s0", "envelope runs need s0 >= 1");
  if (!(a.sigma > 0.0 && a.sigma < 1.0)) throw ConfigError("analysis.sigma", "must be in (0, 1)");
  if (a.epsilon < 0.0) throw ConfigError("analysis.epsilon", "must be nonnegative (0 selects the default)");
  if (!(a.delta >= 0.0)) throw ConfigError("analysis.delta", "must be nonnegative");
  for (const auto& [k, v] : a.thresholds)
    if (!(v >= 0.0)) throw ConfigError("analysis.thresholds." + k, "must be nonnegative");
}

std::string ExperimentConfig::to_json() const {
  json j;
  j["kind"] = kind;
  j["grid"] = {{"n", solver.grid.size()}, {"length", solver.grid.length()}};
  j["solver"] = {{"dt", solver.dt},
                 {"horizon", solver.horizon},
                 {"dealias", solver.dealias},
                 {"capture_every", solver.capture_every},
                 {"blowup_threshold", solver.blowup_threshold},
                 {"nonlinear", solver.nonlinear}};
  json params = json::object();
  for (const auto& [k, v] : data.params) params[k] = v.size() == 1 ? json(v[0]) : json(v);
  j["data"] = {{"family", data.family}, {"params", params}, {"seed", data.seed}, {"rescale", rescale}};
  j["analysis"] = {{"s0", analysis.s0},
                   {"sigma", analysis.sigma},
                   {"bigM", analysis.resolved_bigM()},
                   {"epsilon", analysis.epsilon},
                   {"padding", analysis.padding},
                   {"pairs", analysis.pairs},
                   {"delta", analysis.delta},
                   {"sizes", analysis.sizes},
                   {"refine", analysis.refine},
                   {"thresholds", analysis.thresholds}};
  j["output"] = {{"path", output.path}, {"fields", output.fields}};
  return j.dump(2);
}

}  // namespace bogauge
