#include "bogauge/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bogauge/errors.hpp"
#include "bogauge/littlewood_paley.hpp"
#include "bogauge/spectral.hpp"

namespace bogauge {

namespace {

// Band profile straight from the coefficients: one transform per field
// instead of one per band.
std::vector<double> profile_of(const Spectrum& s, const LPBank& lp, double order) {
  const auto& g = s.grid();
  const int K = lp.kmax();
  std::vector<double> acc(K + 1, 0.0);
  for (int j = 0; j < g.size(); ++j) {
    const double xi = g.xi(j);
    const double w = std::pow(1.0 + xi * xi, order) * std::norm(s[j]) / g.length();
    if (w == 0.0) continue;
    for (int k = 0; k <= K; ++k) {
      // Nyquist: band symbols are even, so the slot is carried unchanged.
      const double p = lp.symbol(LPSelector::band(k), xi);
      acc[k] += p * p * w;
    }
  }
  for (auto& v : acc) v = std::sqrt(v);
  return acc;
}

FrequencyEnvelope construct(const std::vector<double>& a, double epsilon, double sigma, int bigM) {
  const int n = static_cast<int>(a.size());
  const double inv_eps2 = 1.0 / (epsilon * epsilon);
  FrequencyEnvelope c{std::vector<double>(n), sigma, bigM, epsilon};
  for (int j = 0; j < n; ++j) {
    double below = 0.0, above = 0.0;
    for (int k = 0; k <= j; ++k) below += std::exp2(-bigM * double(j - k)) * a[k];
    for (int k = j + 1; k < n; ++k) above += std::exp2(-sigma * double(k - j)) * a[k];
    c.values[j] = std::exp2(-sigma * j) + inv_eps2 * (below + above);
  }
  return c;
}

void check_params(double epsilon, double sigma, int bigM) {
  if (!(epsilon > 0.0)) throw ContractError("envelope: epsilon must be positive");
  if (!(sigma > 0.0)) throw ContractError("envelope: sigma must be positive");
  if (bigM < 1) throw ContractError("envelope: M must be >= 1");
}

double sup_ratio(const std::vector<double>& a, const FrequencyEnvelope& c) {
  if (c.values.size() < a.size())
    throw ContractError("envelope: " + std::to_string(c.values.size()) +
                        " values stored but the grid has " + std::to_string(a.size()) + " bands");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(c.values[k] > 0.0)) throw ContractError("envelope: c_k must be strictly positive");
    m = std::max(m, a[k] / c.values[k]);
  }
  return m;
}

}  // namespace

std::string EnvelopeViolation::describe() const {
  std::ostringstream os;
  os << axiom << " violated at k=" << k;
  if (axiom.rfind("raise", 0) == 0) os << ", r=" << r;
  os << ": " << lhs << " > " << rhs;
  return os.str();
}

std::vector<double> lp_profile(const Field& f, double s) {
  return profile_of(to_spectrum(f), LPBank(f.grid()), s);
}

FrequencyEnvelope build_envelope(const std::vector<double>& a, double epsilon, double sigma,
                                 int bigM, const EnvelopeConstants& constants) {
  check_params(epsilon, sigma, bigM);
  if (a.empty()) throw ContractError("build_envelope: empty profile");
  for (double v : a)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw ContractError("build_envelope: profile entries must be finite and nonnegative");
  FrequencyEnvelope c = construct(a, epsilon, sigma, bigM);
  const auto bad = verify_envelope(c, constants);
  if (!bad.empty()) {
    std::string msg = "build_envelope: " + std::to_string(bad.size()) + " axiom violation(s)";
    for (std::size_t i = 0; i < std::min<std::size_t>(bad.size(), 5); ++i)
      msg += "; " + bad[i].describe();
    throw EnvelopeAxiomError(msg);
  }
  return c;
}

std::vector<EnvelopeViolation> verify_envelope(const FrequencyEnvelope& c,
                                               const EnvelopeConstants& k) {
  std::vector<EnvelopeViolation> out;
  const auto& v = c.values;
  if (v.empty()) {
    out.push_back({"c-norm", 0, 0, 0.0, k.c0_min});
    return out;
  }
  if (v[0] < k.c0_min) out.push_back({"c-norm", 0, 0, k.c0_min, v[0]});
  if (v[0] > k.c0_max) out.push_back({"c-norm", 0, 0, v[0], k.c0_max});

  double energy = 0.0;
  for (double x : v) energy += x * x;
  if (!(energy <= k.energy_bound)) out.push_back({"c-energy", 0, 0, energy, k.energy_bound});

  const double bound = std::sqrt(k.energy_bound);
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    if (!(v[i] <= bound)) out.push_back({"bounded", i, 0, v[i], bound});

  const double slack = 1.0 + k.rel_tol;
  for (int i = 0; i < n; ++i) {
    for (int r = 1; i + r < n; ++r) {
      const double lower = std::exp2(-c.bigM * double(r)) * v[i];
      const double upper = std::exp2(c.sigma * r) * v[i];
      if (lower > v[i + r] * slack) out.push_back({"raise-lower", i, r, lower, v[i + r]});
      if (v[i + r] > upper * slack) out.push_back({"raise-upper", i, r, v[i + r], upper});
    }
  }
  return out;
}

double envelope_sup(const Field& f, const FrequencyEnvelope& c, double s) {
  return sup_ratio(lp_profile(f, s), c);
}

double envelope_norm(const Field& f, const FrequencyEnvelope& c, double s) {
  const Spectrum sp = to_spectrum(f);
  return sobolev_norm(sp, s) + sup_ratio(profile_of(sp, LPBank(f.grid()), s), c);
}

double strichartz_norm(const Trajectory& traj, int k) {
  if (traj.size() == 0) throw ContractError("strichartz_norm: empty trajectory");
  if (k < 0 || k > 2) throw ContractError("strichartz_norm: k must be in 0..2");
  std::vector<double> ck(traj.size());
  double sup_h = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const Field& u = traj.snapshots[i];
    std::vector<double> acc(u.size(), 0.0);
    for (int j = 0; j <= k; ++j) {
      const Field d = j == 0 ? u : derivative(u, j);
      for (int p = 0; p < u.size(); ++p) acc[p] += std::abs(d[p]);
    }
    ck[i] = *std::max_element(acc.begin(), acc.end());
    sup_h = std::max(sup_h, sobolev_norm(u, k));
  }
  double l4 = 0.0;
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const double h = std::abs(traj.times[i] - traj.times[i - 1]);
    l4 += 0.5 * h * (std::pow(ck[i - 1], 4) + std::pow(ck[i], 4));
  }
  return std::pow(l4, 0.25) + sup_h;
}

double EnvelopeReport::max_envelope_ratio() const {
  return envelope_ratio.empty() ? 0.0
                                : *std::max_element(envelope_ratio.begin(), envelope_ratio.end());
}

double EnvelopeReport::max_persistence_ratio() const {
  return persistence_ratio.empty()
             ? 0.0
             : *std::max_element(persistence_ratio.begin(), persistence_ratio.end());
}

double default_epsilon(const Field& u0) {
  return std::sqrt(std::max(sobolev_norm(u0, 1.0), 1e-8));
}

EnvelopeReport envelope_stability(const Trajectory& traj, double s0, double epsilon, double sigma,
                                  int bigM, const StabilityBounds& bounds,
                                  const EnvelopeConstants& constants) {
  if (traj.size() == 0) throw ContractError("envelope_stability: empty trajectory");
  const Field& u0 = traj.initial();
  if (epsilon <= 0.0) epsilon = default_epsilon(u0);
  check_params(epsilon, sigma, bigM);

  const LPBank lp(u0.grid());
  const Spectrum s_init = to_spectrum(u0);
  const auto a0 = profile_of(s_init, lp, 1.0);

  EnvelopeReport rep;
  rep.times = traj.times;
  rep.envelope = construct(a0, epsilon, sigma, bigM);
  rep.violations = verify_envelope(rep.envelope, constants);
  rep.axioms_pass = rep.violations.empty();
  const auto& c = rep.envelope.values;
  const double eps2 = epsilon * epsilon;

  const double hs0_init = sobolev_norm(s_init, s0);
  double weighted = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double t = std::exp2((s0 - 1.0) * j) * c[j];
    weighted += t * t;
  }
  rep.l2_transfer_constant = std::sqrt(weighted) / (1.0 + hs0_init / eps2);

  if (u0.max_abs() == 0.0) {
    rep.trivial = true;
    rep.envelope_ratio.assign(traj.size(), 0.0);
    rep.persistence_ratio.assign(traj.size(), 0.0);
    rep.band_leakage.assign(c.size(), 0.0);
    rep.envelope_pass = rep.persistence_pass = rep.band_pass = true;
    return rep;
  }

  const double base = sobolev_norm(s_init, 1.0) + sup_ratio(a0, rep.envelope);
  rep.band_leakage.assign(c.size(), 0.0);
  for (const Field& u : traj.snapshots) {
    const Spectrum sp = to_spectrum(u);
    const auto a = profile_of(sp, lp, 1.0);
    rep.envelope_ratio.push_back((sobolev_norm(sp, 1.0) + sup_ratio(a, rep.envelope)) / base);
    rep.persistence_ratio.push_back(sobolev_norm(sp, s0) / hs0_init);
    for (std::size_t k = 0; k < c.size(); ++k)
      rep.band_leakage[k] = std::max(rep.band_leakage[k], a[k] / (eps2 * c[k]));
  }
  rep.envelope_pass = rep.max_envelope_ratio() <= bounds.envelope_ratio;
  rep.persistence_pass = rep.max_persistence_ratio() <= bounds.persistence_ratio;
  rep.band_pass =
      *std::max_element(rep.band_leakage.begin(), rep.band_leakage.end()) <= bounds.band_ratio;
  return rep;
}

}  // namespace bogauge
