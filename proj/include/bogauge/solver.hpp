#pragma once

#include <map>
#include <string>
#include <vector>

#include "bogauge/grid.hpp"

namespace bogauge {

/// Fixed-step integration parameters for u_t + H u_xx = u u_x.
struct SolverConfig {
  PeriodicGrid grid{64, 1.0};
  double dt = 1e-3;
  /// Final time; negative values integrate backwards via u(t,x) -> u(-t,-x).
  double horizon = 1.0;
  bool dealias = true;
  /// Snapshot every `capture_every` steps (the initial state is always kept).
  int capture_every = 1;
  /// Max-norm guard; exceeding it raises BlowupError.
  double blowup_threshold = 1e6;
  /// Off: pure linear flow u_t + H u_xx = 0.
  bool nonlinear = true;

  /// Number of steps; the horizon must be an integer multiple of dt.
  long steps() const;
  void validate() const;
};

struct ConservedTriple {
  double l2 = 0.0;           // int u^2
  double hamiltonian = 0.0;  // int u H u_x - u^3 / 3
  double h1q = 0.0;          // int u_x^2 - 3/4 u^2 H u_x + 1/8 u^4
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Field> snapshots;
  /// Per-snapshot series: l2, hamiltonian, h1q, mean, max_abs, h1_norm,
  /// imag_contamination.
  std::map<std::string, std::vector<double>> diagnostics;

  std::size_t size() const noexcept { return times.size(); }
  const Field& initial() const { return snapshots.front(); }
  const Field& final() const { return snapshots.back(); }
};

/// u_t = -H u_xx + (u^2)_x / 2. The quadratic term is formed in conservative
/// form; with `dealias` the input and the product are restricted to the
/// modes |m| <= (n-1)/3.
Field bo_rhs(const Field& u, bool dealias = true, bool nonlinear = true);

/// Linear part only: -H u_xx, symbol -4 pi^2 i xi |xi|.
Field bo_linear(const Field& u);

struct StepOptions {
  bool dealias = true;
  bool nonlinear = true;
  double blowup_threshold = 1e6;
};

/// One integrating-factor RK4 step. The linear group e^{-4 pi^2 i xi|xi| t}
/// is applied exactly, so purely linear problems are advanced without error.
Field step(const Field& u, double dt, const StepOptions& opts = {});

/// Integrate from u0 to cfg.horizon. u0 must be real and mean-zero.
Trajectory evolve(const Field& u0, const SolverConfig& cfg);

ConservedTriple conserved(const Field& u);

/// Scaling symmetry u(x) -> u(x / lambda) / lambda; the result lives on a
/// grid of length lambda * L with the same point count.
Field rescale(const Field& u, double lambda);

/// x -> -x on the lattice.
Field reflect(const Field& u);

/// Exact linear propagation by time t.
Field linear_propagate(const Field& u, double t);

}  // namespace bogauge
