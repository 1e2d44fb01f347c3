#include "bogauge/littlewood_paley.hpp"

#include <cmath>

#include "bogauge/errors.hpp"

namespace bogauge {

std::string LPSelector::name() const {
  switch (kind) {
    case Kind::band: return "P_" + std::to_string(k);
    case Kind::at_most: return "P_<=" + std::to_string(k);
    case Kind::above: return "P_>" + std::to_string(k);
    case Kind::lo: return "P_lo";
    case Kind::hi: return "P_hi";
    case Kind::LO: return "P_LO";
    case Kind::HI: return "P_HI";
    case Kind::plus_hi: return "P_+hi";
    case Kind::minus_hi: return "P_-hi";
    case Kind::plus_HI: return "P_+HI";
    case Kind::minus_HI: return "P_-HI";
  }
  return "?";
}

double LPBank::psi(double xi) {
  const double a = std::abs(xi);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double t = 2.0 - a;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

namespace {

int smallest_identity_level(const PeriodicGrid& g) {
  int k = 0;
  while (std::ldexp(1.0, k) < g.max_frequency()) ++k;
  return k;
}

double at_most(int k, double xi) {
  if (k < 0) return 0.0;
  return LPBank::psi(std::ldexp(xi, -k));
}

}  // namespace

LPBank::LPBank(PeriodicGrid grid) : grid_(grid), kmax_(smallest_identity_level(grid)) {}

double LPBank::symbol(LPSelector sel, double xi) const {
  using K = LPSelector::Kind;
  if (sel.k < 0) throw ContractError("lp_project: level must be >= 0");
  switch (sel.kind) {
    case K::band: return at_most(sel.k, xi) - at_most(sel.k - 1, xi);
    case K::at_most: return at_most(sel.k, xi);
    case K::above: return 1.0 - at_most(sel.k, xi);
    case K::lo: return at_most(0, xi);
    case K::hi: return 1.0 - at_most(0, xi);
    case K::LO: return at_most(2, xi);
    case K::HI: return 1.0 - at_most(2, xi);
    case K::plus_hi: return riesz_symbol(Half::plus, xi) * (1.0 - at_most(0, xi));
    case K::minus_hi: return riesz_symbol(Half::minus, xi) * (1.0 - at_most(0, xi));
    case K::plus_HI: return riesz_symbol(Half::plus, xi) * (1.0 - at_most(2, xi));
    case K::minus_HI: return riesz_symbol(Half::minus, xi) * (1.0 - at_most(2, xi));
  }
  return 0.0;
}

Field LPBank::project(const Field& f, LPSelector sel) const {
  require_same_grid(grid_, f.grid(), "LPBank::project");
  using K = LPSelector::Kind;
  const bool even = sel.kind != K::plus_hi && sel.kind != K::minus_hi &&
                    sel.kind != K::plus_HI && sel.kind != K::minus_HI;
  const FieldKind out = even ? f.kind() : FieldKind::complex;
  return apply_multiplier(
      f, [this, sel](double xi) { return cplx(symbol(sel, xi)); }, out);
}

Field lp_project(const Field& f, LPSelector sel) { return LPBank(f.grid()).project(f, sel); }

}  // namespace bogauge
