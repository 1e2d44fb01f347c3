#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "bogauge/config.hpp"
#include "bogauge/data.hpp"
#include "bogauge/errors.hpp"
#include "bogauge/experiments.hpp"
#include "bogauge/report.hpp"
#include "bogauge/spectral.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bogauge;
using json = nlohmann::json;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("bogauge_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
  return path;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bogauge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

json small(const std::string& kind) {
  return {{"kind", kind},
          {"grid", {{"n", 64}, {"length", 1.0}}},
          {"solver", {{"dt", 1.25e-3}, {"horizon", 0.01}, {"capture_every", 2}}},
          {"data", {{"family", "random_band"}, {"params", {{"kmax", 4}, {"amplitude", 0.01}}}, {"seed", 3}}}};
}

void require_config_error(const json& j, const std::string& field) {
  try {
    ExperimentConfig::parse(j.dump());
    FAIL("expected ConfigError for " << field);
  } catch (const ConfigError& e) {
    CHECK(e.field() == field);
  }
}

}  // namespace

TEST_CASE("config parsing fills defaults") {
  const ExperimentConfig c = ExperimentConfig::parse(R"({"kind": "solve"})");
  CHECK(c.kind == "solve");
  CHECK(c.solver.grid.size() == 256);
  CHECK(c.analysis.sigma == 0.05);
  CHECK(c.analysis.resolved_bigM() == 2);
  CHECK(c.output.path == "report.json");

  const ExperimentConfig d = ExperimentConfig::parse(small("envelope").dump());
  CHECK(d.solver.grid.size() == 64);
  CHECK(d.solver.dt == 1.25e-3);
  CHECK(d.data.family == "random_band");
  CHECK(d.data.params.at("kmax") == std::vector<double>{4});

  // The canonical echo parses back to the same config.
  const ExperimentConfig e = ExperimentConfig::parse(d.to_json());
  CHECK(e.to_json() == d.to_json());

  CHECK(default_thresholds("conserve").at("ratio_min") == 8);
  CHECK(experiment_kinds().size() == 7);
}

TEST_CASE("config rejects bad input with the field name") {
  require_config_error(json::object(), "kind");
  require_config_error({{"kind", "nope"}}, "kind");
  json j = small("solve");
  j["grid"]["n"] = 63;
  require_config_error(j, "grid.n");
  j = small("solve");
  j["solver"]["dt"] = -1;
  require_config_error(j, "solver.dt");
  j = small("solve");
  j["solver"]["dt"] = 3e-3;  // horizon not a multiple
  require_config_error(j, "solver.horizon");
  j = small("solve");
  j["solver"]["bogus"] = 1;
  require_config_error(j, "solver.bogus");
  j = small("solve");
  j["data"]["family"] = "nope";
  require_config_error(j, "data.family");
  j = small("solve");
  j["data"]["params"]["width"] = 0.1;
  require_config_error(j, "data.params.width");
  j = small("conserve");
  j["analysis"] = {{"thresholds", {{"w_residual", 1}}}};
  require_config_error(j, "analysis.thresholds.w_residual");
  j = small("envelope");
  j["analysis"] = {{"s0", 0.5}};
  require_config_error(j, "analysis.s0");
  CHECK_THROWS_AS(ExperimentConfig::parse("{not json"), ConfigError);
}

TEST_CASE("verdicts") {
  CHECK(Verdict::at_most(1, 2).pass);
  CHECK(!Verdict::at_most(3, 2).pass);
  CHECK(Verdict::at_least(3, 2).pass);
  CHECK(Verdict::within(2, 1, 3).pass);
  CHECK(!Verdict::within(4, 1, 3).pass);
  CHECK(!Verdict::at_most(std::nan(""), 2).pass);
  CHECK(Verdict::holds(true).pass);
}

TEST_CASE("report round trip and CSV") {
  TempDir tmp;
  ExperimentReport r;
  r.kind = "solve";
  r.config_json = R"({"kind":"solve"})";
  r.results = {{"a", 0.1}, {"b", std::numeric_limits<double>::quiet_NaN()}, {"c", 1e-300}};
  r.series = {{"t", {0.0, 0.5, 1.0}}, {"x", {1.0, 2.0, 3.0}}, {"empty", {}}};
  r.verdicts = {{"ok", Verdict::at_most(0.1, 1.0)}};
  r.notes = {{"n", "hello"}};
  r.version = "0.1.0";

  const ExperimentReport back = ExperimentReport::from_json(r.to_json());
  CHECK(back.kind == "solve");
  CHECK(back.results.at("a") == 0.1);
  CHECK(std::isnan(back.results.at("b")));
  CHECK(back.results.at("c") == 1e-300);
  CHECK(back.series.at("x") == r.series.at("x"));
  CHECK(back.series.count("empty") == 1);
  CHECK(back.verdicts.at("ok").pass);
  CHECK(back.notes.at("n") == "hello");
  CHECK(back.to_json() == r.to_json());
  CHECK(json::parse(r.to_json())["pass"] == true);

  r.write_csv("x", tmp.file("x.csv"));
  CHECK(read_file(tmp.file("x.csv")) == "t,x\n0,1\n0.5,2\n1,3\n");
  CHECK_THROWS_AS(r.write_csv("missing", tmp.file("m.csv")), ConfigError);

  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("rng streams are deterministic and distinct") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  // The first output of mt19937_64 with the default seed is fixed by the standard.
  std::mt19937_64 ref(5489u);
  CHECK(Rng(5489u).next_u64() == ref());
  Rng s0 = Rng::stream(7, 0), s1 = Rng::stream(7, 1), s0b = Rng::stream(7, 0);
  const double x0 = s0.uniform(), x1 = s1.uniform();
  CHECK(x0 != x1);
  CHECK(x0 == s0b.uniform());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform(-2, 3);
    CHECK(u >= -2);
    CHECK(u < 3);
  }
}

TEST_CASE("data families") {
  const PeriodicGrid g(128, 2.0);
  DataSpec s;
  s.family = "trig";
  s.params = {{"k", {2}}, {"amplitude", {0.5}}};
  const Field u = make_datum(s, g);
  const Field expect = Field::sample(g, [](double x) { return 0.5 * std::cos(2 * pi * 2 * x / 2.0); });
  CHECK((u - expect).max_abs() < 1e-14);

  for (const char* fam : {"zero", "random_band", "gaussian", "poisson", "traveling_wave"}) {
    DataSpec d;
    d.family = fam;
    d.seed = 11;
    if (std::string(fam) == "poisson" || std::string(fam) == "traveling_wave") d.params = {{"a", {0.3}}};
    const Field f = make_datum(d, g);
    CHECK(f.is_real());
    CHECK(std::abs(f.mean()) < 1e-14);
  }

  DataSpec r;
  r.family = "random_band";
  r.seed = 5;
  CHECK((make_datum(r, g) - make_datum(r, g)).max_abs() == 0.0);
  DataSpec r2 = r;
  r2.seed = 6;
  CHECK((make_datum(r, g) - make_datum(r2, g)).max_abs() > 0.0);

  // Same seed, same continuum field on a finer grid.
  const Field f1 = random_smooth_field(PeriodicGrid(64, 1.0), 9, 8, 1.0);
  const Field f2 = random_smooth_field(PeriodicGrid(128, 1.0), 9, 8, 1.0);
  for (int j = 0; j < 64; ++j) CHECK(std::abs(f1[j] - f2[2 * j]) < 1e-14);
}

TEST_CASE("runners produce verdicts") {
  const std::vector<std::pair<std::string, json>> cases = {
      {"solve", small("solve")},
      {"conserve", small("conserve")},
      {"gauge-check", [] {
         json j = small("gauge-check");
         j["analysis"] = {{"sizes", {64, 128}}};
         return j;
       }()},
      {"lipschitz", [] {
         json j = small("lipschitz");
         j["analysis"] = {{"pairs", 3}};
         return j;
       }()},
      {"envelope", [] {
         json j = small("envelope");
         j["analysis"] = {{"refine", false}};
         return j;
       }()},
      {"paraproduct", [] {
         json j = small("paraproduct");
         j["analysis"] = {{"pairs", 3}, {"sizes", {64, 128}}};
         return j;
       }()},
      {"converge", [] {
         json j = small("converge");
         j["analysis"] = {{"sizes", {32, 64}}};
         return j;
       }()},
  };
  for (const auto& [kind, j] : cases) {
    CAPTURE(kind);
    const ExperimentReport r = run_experiment(ExperimentConfig::parse(j.dump()));
    CHECK(r.kind == kind);
    CHECK(!r.verdicts.empty());
    CHECK(!r.numerical_failure);
    CHECK(!r.version.empty());
    CHECK(json::parse(r.config_json)["kind"] == kind);
  }
}

TEST_CASE("blowup is recorded, not thrown") {
  json j = small("solve");
  j["solver"]["blowup_threshold"] = 1e-6;
  const ExperimentReport r = run_experiment(ExperimentConfig::parse(j.dump()));
  CHECK(r.numerical_failure);
  CHECK(!r.verdicts.at("no_blowup").pass);
  CHECK(!r.pass());
}

TEST_CASE("cli exit codes and outputs") {
  TempDir tmp;
  json j = small("solve");
  j["output"] = {{"path", tmp.file("out.json")}, {"fields", {"l2"}}};
  const std::string cfg = write_file(tmp.file("solve.json"), j.dump());

  CHECK(run_cli({"solve", "--config", cfg, "--quiet"}) == 0);
  CHECK(fs::exists(tmp.file("out.json")));
  CHECK(fs::exists(tmp.file("out.l2.csv")));
  const json rep = json::parse(read_file(tmp.file("out.json")));
  CHECK(rep["kind"] == "solve");
  CHECK(rep["pass"] == true);

  // --out and --seed override the config.
  CHECK(run_cli({"solve", "--config", cfg, "--out", tmp.file("o2.json"), "--seed", "9", "--quiet"}) == 0);
  CHECK(json::parse(read_file(tmp.file("o2.json")))["config"]["data"]["seed"] == 9);

  CHECK(run_cli({"conserve", "--config", cfg, "--quiet"}) == 2);  // kind mismatch
  CHECK(run_cli({"solve", "--quiet"}) == 2);                        // missing --config
  CHECK(run_cli({"frobnicate", "--config", cfg}) == 2);
  CHECK(run_cli({"solve", "--config", tmp.file("absent.json")}) == 2);
  j["grid"]["bogus"] = 1;
  CHECK(run_cli({"solve", "--config", write_file(tmp.file("bad.json"), j.dump()), "--quiet"}) == 2);

  json f = small("conserve");
  f["analysis"] = {{"thresholds", {{"l2_drift", 0.0}, {"ratio_min", 1e9}}}};
  f["output"] = {{"path", tmp.file("c.json")}};
  CHECK(run_cli({"conserve", "--config", write_file(tmp.file("c_cfg.json"), f.dump()), "--quiet"}) == 1);

  json b = small("solve");
  b["solver"]["blowup_threshold"] = 1e-6;
  b["output"] = {{"path", tmp.file("b.json")}};
  CHECK(run_cli({"solve", "--config", write_file(tmp.file("b_cfg.json"), b.dump()), "--quiet"}) == 3);
}

TEST_CASE("reruns are bitwise identical") {
  json j = small("lipschitz");
  j["analysis"] = {{"pairs", 2}};
  const ExperimentConfig c = ExperimentConfig::parse(j.dump());
  const ExperimentReport a = run_experiment(c), b = run_experiment(c);
  CHECK(a.results == b.results);
  CHECK(a.series == b.series);
}
