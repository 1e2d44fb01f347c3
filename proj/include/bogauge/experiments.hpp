#pragma once

#include <string>
#include <vector>

#include "bogauge/config.hpp"
#include "bogauge/report.hpp"

namespace bogauge {

// Each runner returns a complete report. Blowup is caught and recorded as a
// failed "no_blowup" verdict with numerical_failure set. Config errors
// propagate as ConfigError.

ExperimentReport run_solve(const ExperimentConfig& cfg);
ExperimentReport run_conservation(const ExperimentConfig& cfg);
ExperimentReport run_gauge_check(const ExperimentConfig& cfg);
ExperimentReport run_lipschitz(const ExperimentConfig& cfg);
ExperimentReport run_envelope(const ExperimentConfig& cfg);
ExperimentReport run_paraproduct(const ExperimentConfig& cfg);
ExperimentReport run_convergence(const ExperimentConfig& cfg);

/// Dispatch on cfg.kind and stamp config echo, version and wall time.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Real random field sum_{m=1}^{mmax} m^{-decay} (a_m cos + b_m sin)(2 pi m x / L)
/// with a_m, b_m uniform in [-1, 1] drawn from `rng`; mmax is clipped to the
/// grid's dealiased band (n-1)/3 without changing the draws, so one seed gives
/// the same continuum function on every grid that resolves it.
Field random_smooth_field(const PeriodicGrid& grid, std::uint64_t seed, int mmax, double decay);

/// bogauge <kind> --config <path> [--out <path>] [--seed <u64>] [--quiet]
/// Exit codes: 0 all verdicts pass, 1 some verdict fails, 2 usage or config
/// error, 3 numerical failure (blowup or NaN).
int cli_main(int argc, const char* const* argv);

}  // namespace bogauge
