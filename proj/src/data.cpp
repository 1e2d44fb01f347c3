#include "bogauge/data.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "bogauge/errors.hpp"
#include "bogauge/spectral.hpp"

namespace bogauge {

using std::numbers::pi;

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

const std::map<std::string, std::set<std::string>>& family_params() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"zero", {}},
      {"trig", {"k", "amplitude", "phase"}},
      {"random_band", {"kmin", "kmax", "amplitude", "decay"}},
      {"gaussian", {"amplitude", "width", "center", "k"}},
      {"poisson", {"amplitude", "a"}},
      {"traveling_wave", {"a"}},
  };
  return table;
}

double scalar(const DataSpec& s, const std::string& key, double fallback) {
  auto it = s.params.find(key);
  if (it == s.params.end()) return fallback;
  if (it->second.size() != 1)
    throw ConfigError("data.params." + key, "expected a single number");
  return it->second.front();
}

std::vector<double> list(const DataSpec& s, const std::string& key, std::size_t n, double fallback) {
  auto it = s.params.find(key);
  if (it == s.params.end()) return std::vector<double>(n, fallback);
  if (it->second.size() == 1) return std::vector<double>(n, it->second.front());
  if (it->second.size() != n)
    throw ConfigError("data.params." + key, "length must match data.params.k");
  return it->second;
}

int integer(double v, const std::string& field) {
  if (v != std::floor(v)) throw ConfigError(field, "must be an integer");
  return static_cast<int>(v);
}

Field remove_mean(Field f) {
  const cplx m = f.mean();
  std::vector<double> v = f.real_values();
  for (auto& x : v) x -= m.real();
  return Field::from_real(f.grid(), v);
}

double poisson_kernel(double a, double theta) {
  return (1.0 - a * a) / (1.0 - 2.0 * a * std::cos(theta) + a * a);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

void DataSpec::validate() const {
  const auto& table = family_params();
  auto it = table.find(family);
  if (it == table.end()) throw ConfigError("data.family", "unknown family '" + family + "'");
  for (const auto& [key, vals] : params) {
    if (!it->second.count(key))
      throw ConfigError("data.params." + key, "not a parameter of family '" + family + "'");
    if (vals.empty()) throw ConfigError("data.params." + key, "empty value");
    for (double v : vals)
      if (!std::isfinite(v)) throw ConfigError("data.params." + key, "must be finite");
  }
  if (family == "trig") {
    auto k = params.find("k");
    if (k == params.end()) throw ConfigError("data.params.k", "required for family 'trig'");
    for (double v : k->second)
      if (integer(v, "data.params.k") == 0) throw ConfigError("data.params.k", "must be nonzero");
    list(*this, "amplitude", k->second.size(), 0.0);
    list(*this, "phase", k->second.size(), 0.0);
  } else if (family == "random_band") {
    const int lo = integer(scalar(*this, "kmin", 1), "data.params.kmin");
    const int hi = integer(scalar(*this, "kmax", 8), "data.params.kmax");
    if (lo < 1 || hi < lo) throw ConfigError("data.params.kmin", "need 1 <= kmin <= kmax");
    if (scalar(*this, "decay", 0.0) < 0.0)
      throw ConfigError("data.params.decay", "must be nonnegative");
  } else if (family == "gaussian") {
    if (!(scalar(*this, "width", 0.05) > 0.0))
      throw ConfigError("data.params.width", "must be positive");
    integer(scalar(*this, "k", 0), "data.params.k");
  } else if (family == "poisson" || family == "traveling_wave") {
    const double a = scalar(*this, "a", 0.5);
    if (!(a > 0.0 && a < 1.0)) throw ConfigError("data.params.a", "must lie in (0, 1)");
  }
}

Field make_datum(const DataSpec& spec, const PeriodicGrid& g) {
  spec.validate();
  const double L = g.length();
  const std::string& fam = spec.family;
  if (fam == "zero") return Field::zeros(g);

  if (fam == "trig") {
    const auto& k = spec.params.at("k");
    const auto amp = list(spec, "amplitude", k.size(), 0.01);
    const auto ph = list(spec, "phase", k.size(), 0.0);
    return remove_mean(Field::sample(g, [&](double x) {
      double v = 0.0;
      for (std::size_t i = 0; i < k.size(); ++i) v += amp[i] * std::cos(2 * pi * k[i] * x / L + ph[i]);
      return v;
    }));
  }

  if (fam == "random_band") {
    const int lo = static_cast<int>(scalar(spec, "kmin", 1));
    const int hi = static_cast<int>(scalar(spec, "kmax", 8));
    const double amp = scalar(spec, "amplitude", 0.01);
    const double decay = scalar(spec, "decay", 0.0);
    Rng rng(spec.seed);
    std::vector<double> ca, cb;
    for (int m = lo; m <= hi; ++m) {
      ca.push_back(rng.uniform(-1.0, 1.0) * amp * std::exp(-decay * m));
      cb.push_back(rng.uniform(-1.0, 1.0) * amp * std::exp(-decay * m));
    }
    return remove_mean(Field::sample(g, [&](double x) {
      double v = 0.0;
      for (int m = lo; m <= hi; ++m) {
        const double th = 2 * pi * m * x / L;
        v += ca[m - lo] * std::cos(th) + cb[m - lo] * std::sin(th);
      }
      return v;
    }));
  }

  if (fam == "gaussian") {
    const double amp = scalar(spec, "amplitude", 0.01);
    const double w = scalar(spec, "width", 0.05) * L;
    const double c = scalar(spec, "center", 0.5) * L;
    const double k = scalar(spec, "k", 0);
    // Enough images that the truncated periodization is exact in double.
    const int images = 2 + static_cast<int>(std::ceil(9.0 * w / L));
    return remove_mean(Field::sample(g, [&](double x) {
      double v = 0.0;
      for (int p = -images; p <= images; ++p) {
        const double d = x - c + p * L;
        v += std::exp(-d * d / (2 * w * w));
      }
      return amp * v * std::cos(2 * pi * k * (x - c) / L);
    }));
  }

  if (fam == "poisson") {
    const double amp = scalar(spec, "amplitude", 0.01);
    const double a = scalar(spec, "a", 0.5);
    return remove_mean(Field::sample(
        g, [&](double x) { return amp * (poisson_kernel(a, 2 * pi * x / L) - 1.0); }));
  }

  return traveling_wave(g, scalar(spec, "a", 0.5)).profile;
}

TravelingWave traveling_wave(const PeriodicGrid& g, double a) {
  if (!(a > 0.0 && a < 1.0)) throw ContractError("traveling_wave: a must lie in (0, 1)");
  const double L = g.length();
  const Field p1 =
      remove_mean(Field::sample(g, [&](double x) { return poisson_kernel(a, 2 * pi * x / L) - 1.0; }));
  const Field d1 = derivative(p1, 1);
  const Field hd2 = hilbert(derivative(p1, 2));
  const int n = g.size();

  double beta = 4 * pi / L * (1 - a * a);
  double c = 2 * pi / L;
  std::vector<double> r(n), jb(n), jc(n);
  auto residual = [&](double b, double s) {
    double m = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p = p1[j].real(), d = d1[j].real(), h = hd2[j].real();
      r[j] = -s * b * d + b * h - b * b * p * d;
      jb[j] = -s * d + h - 2 * b * p * d;
      jc[j] = -b * d;
      m = std::max(m, std::abs(r[j]));
    }
    return m;
  };

  TravelingWave tw{p1, 0.0, 0.0, 0.0, 0};
  for (int it = 1; it <= 50; ++it) {
    residual(beta, c);
    double bb = 0, bc = 0, cc = 0, rb = 0, rc = 0;
    for (int j = 0; j < n; ++j) {
      bb += jb[j] * jb[j];
      bc += jb[j] * jc[j];
      cc += jc[j] * jc[j];
      rb += jb[j] * r[j];
      rc += jc[j] * r[j];
    }
    const double det = bb * cc - bc * bc;
    if (det == 0.0) throw ContractError("traveling_wave: singular Gauss-Newton system");
    const double db = -(cc * rb - bc * rc) / det;
    const double dc = -(bb * rc - bc * rb) / det;
    beta += db;
    c += dc;
    tw.iterations = it;
    if (std::abs(db) <= 1e-15 * std::abs(beta) && std::abs(dc) <= 1e-15 * std::abs(c)) break;
  }
  tw.beta = beta;
  tw.speed = c;
  tw.residual = residual(beta, c);
  tw.profile = p1 * beta;
  return tw;
}

}  // namespace bogauge
