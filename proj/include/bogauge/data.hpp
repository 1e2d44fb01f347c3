#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bogauge/grid.hpp"

namespace bogauge {

/// Seedable generator with a platform-independent sequence: mt19937_64 is
/// fully specified by the standard, and doubles are taken from the top 53 bits
/// (std::uniform_real_distribution is not portable across library vendors).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream `index` derived from `seed` by splitmix64 mixing.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  double uniform();                    // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)

 private:
  std::mt19937_64 engine_;
};

/// Named initial-datum family with numeric parameters.
///
///   zero
///   trig          sum_i amp_i cos(2 pi k_i x / L + phase_i); params k, amplitude, phase
///                 (scalars or equal-length arrays)
///   random_band   sum_{m=kmin}^{kmax} amplitude e^{-decay m} (a_m cos + b_m sin),
///                 a_m, b_m uniform in [-1, 1]
///   gaussian      amplitude exp(-(x-center)^2 / (2 width^2)) cos(2 pi k (x-center) / L),
///                 periodized, width and center as fractions of L
///   poisson       amplitude (P_a(x) - 1), P_a = (1 - a^2) / (1 - 2a cos(2 pi x/L) + a^2)
///   traveling_wave  the exact periodic wave with parameter a (see traveling_wave())
///
/// Every family except zero is made exactly mean-zero on the lattice.
struct DataSpec {
  std::string family = "zero";
  std::map<std::string, std::vector<double>> params;
  std::uint64_t seed = 0;

  /// Validates family and parameter names; throws ConfigError naming the field.
  void validate() const;
};

Field make_datum(const DataSpec& spec, const PeriodicGrid& grid);

/// Periodic traveling wave u(t, x) = phi(x - c t) of u_t + H u_xx = u u_x,
/// phi = beta (P_a(x) - 1). beta and c are fitted by Gauss-Newton on the
/// lattice residual -c phi' + H phi'' - phi phi', starting away from the
/// closed-form values beta = 4 pi / L, c = (2 pi / L)(1 - 3a^2)/(1 - a^2).
struct TravelingWave {
  Field profile;
  double beta = 0.0;
  double speed = 0.0;
  double residual = 0.0;  // max-norm of the lattice residual at convergence
  int iterations = 0;
};

TravelingWave traveling_wave(const PeriodicGrid& grid, double a);

}  // namespace bogauge
