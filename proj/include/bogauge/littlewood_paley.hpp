#pragma once

#include <string>

#include "bogauge/grid.hpp"
#include "bogauge/spectral.hpp"

namespace bogauge {

/// Which Littlewood-Paley piece to extract.
///
///   band(k)    P_k = P_{<=k} - P_{<=k-1}
///   at_most(k) P_{<=k}, symbol psi(xi / 2^k)
///   above(k)   P_{>k} = 1 - P_{<=k}
///   lo, hi     P_0 and P_{>0}
///   LO, HI     P_{<=2} and P_{>2}
///   plus_hi, minus_hi, plus_HI, minus_HI   composed with the Riesz halves
struct LPSelector {
  enum class Kind { band, at_most, above, lo, hi, LO, HI, plus_hi, minus_hi, plus_HI, minus_HI };
  Kind kind = Kind::band;
  int k = 0;

  static LPSelector band(int k) { return {Kind::band, k}; }
  static LPSelector at_most(int k) { return {Kind::at_most, k}; }
  static LPSelector above(int k) { return {Kind::above, k}; }
  static LPSelector lo() { return {Kind::lo, 0}; }
  static LPSelector hi() { return {Kind::hi, 0}; }
  static LPSelector LO() { return {Kind::LO, 0}; }
  static LPSelector HI() { return {Kind::HI, 0}; }
  static LPSelector plus_hi() { return {Kind::plus_hi, 0}; }
  static LPSelector minus_hi() { return {Kind::minus_hi, 0}; }
  static LPSelector plus_HI() { return {Kind::plus_HI, 0}; }
  static LPSelector minus_HI() { return {Kind::minus_HI, 0}; }

  std::string name() const;
};

/// The Littlewood-Paley projection family on one grid.
///
/// psi is the even cutoff equal to 1 on |xi| <= 1, 0 on |xi| >= 2, blended
/// by the quintic smoothstep q(t) = 6t^5 - 15t^4 + 10t^3 as psi = q(2 - |xi|).
class LPBank {
 public:
  explicit LPBank(PeriodicGrid grid);

  static double psi(double xi);

  const PeriodicGrid& grid() const noexcept { return grid_; }
  /// Smallest K with P_{<=K} = Id on the lattice.
  int kmax() const noexcept { return kmax_; }

  /// Multiplier value of the selected projection at frequency xi.
  double symbol(LPSelector sel, double xi) const;

  Field project(const Field& f, LPSelector sel) const;

 private:
  PeriodicGrid grid_;
  int kmax_;
};

/// Convenience wrapper building an LPBank for f's grid.
Field lp_project(const Field& f, LPSelector sel);

}  // namespace bogauge
