#pragma once

#include <string>
#include <vector>

#include "bogauge/grid.hpp"
#include "bogauge/solver.hpp"

namespace bogauge {

/// Dyadic majorant c_0, c_1, ... with log-Lipschitz growth control.
struct FrequencyEnvelope {
  std::vector<double> values;
  double sigma = 0.05;
  int bigM = 2;
  double epsilon = 1.0;  // epsilon (not squared)
};

/// Tolerances for the envelope axioms. The implied constants of "c_0 ~ 1",
/// "sum c_k^2 <~ 1" and "c_k <~ 1" are configuration.
struct EnvelopeConstants {
  double c0_min = 0.25;
  double c0_max = 4.0;
  double energy_bound = 64.0;  // A in sum c_k^2 <= A
  double rel_tol = 1e-12;      // slack on the log-Lipschitz inequalities
};

struct EnvelopeViolation {
  std::string axiom;  // c-norm, c-energy, raise-lower, raise-upper, bounded
  int k = 0;
  int r = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string describe() const;
};

/// a_k = ||P_k f||_{H^s} for k = 0..kmax.
std::vector<double> lp_profile(const Field& f, double s);

/// c_j = 2^{-sigma j} + eps^{-2} (sum_{k<=j} 2^{-M|k-j|} a_k + sum_{k>j} 2^{-sigma|k-j|} a_k).
///
/// The result is checked with verify_envelope; any violation raises
/// EnvelopeAxiomError listing the failed inequalities.
FrequencyEnvelope build_envelope(const std::vector<double>& a, double epsilon, double sigma,
                                 int bigM, const EnvelopeConstants& constants = {});

/// Check c-norm, c-energy, both log-Lipschitz bounds for every k, r, and
/// c_k <= sqrt(A). An empty result means the envelope passes.
std::vector<EnvelopeViolation> verify_envelope(const FrequencyEnvelope& c,
                                               const EnvelopeConstants& constants = {});

/// ||f||_{H^s} + sup_k ||P_k f||_{H^s} / c_k.
double envelope_norm(const Field& f, const FrequencyEnvelope& c, double s);
/// The sup term alone.
double envelope_sup(const Field& f, const FrequencyEnvelope& c, double s);

/// ||u||_{L^4_t C^k_x} + ||u||_{L^inf_t H^k_x} over the snapshots, with the
/// time integral by the trapezoid rule and C^k = max_x sum_{j<=k} |d^j u|.
double strichartz_norm(const Trajectory& traj, int k);

struct StabilityBounds {
  double envelope_ratio = 10.0;     // max_t ||u(t)||_{H^1_c} / ||u0||_{H^1_c}
  double persistence_ratio = 10.0;  // max_t ||u(t)||_{H^s0} / ||u0||_{H^s0}
  double band_ratio = 10.0;         // max_t ||P_k u(t)||_{H^1} / (eps^2 c_k)
};

struct EnvelopeReport {
  std::vector<double> times;
  std::vector<double> envelope_ratio;     // r(t)
  std::vector<double> persistence_ratio;  // ||u(t)||_{H^s0} / ||u0||_{H^s0}
  std::vector<double> band_leakage;       // per band k: max_t ||P_k u(t)||_{H^1} / (eps^2 c_k)
  FrequencyEnvelope envelope;
  std::vector<EnvelopeViolation> violations;
  double l2_transfer_constant = 0.0;  // K in the weighted l^2 bound
  bool trivial = false;
  bool axioms_pass = false;
  bool envelope_pass = false;
  bool persistence_pass = false;
  bool band_pass = false;

  double max_envelope_ratio() const;
  double max_persistence_ratio() const;
  bool pass() const { return axioms_pass && envelope_pass && persistence_pass && band_pass; }
};

/// Default epsilon: eps^2 = max(||u0||_{H^1}, 1e-8).
double default_epsilon(const Field& u0);

/// Build c from u(0) and track how the H^1_c and H^{s0} norms evolve.
/// Pass epsilon <= 0 to use default_epsilon.
EnvelopeReport envelope_stability(const Trajectory& traj, double s0, double epsilon, double sigma,
                                  int bigM, const StabilityBounds& bounds = {},
                                  const EnvelopeConstants& constants = {});

}  // namespace bogauge
