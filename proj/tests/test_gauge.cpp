#include <cmath>
#include <numbers>

#include "bogauge/errors.hpp"
#include "bogauge/gauge.hpp"
#include "bogauge/littlewood_paley.hpp"
#include "bogauge/solver.hpp"
#include "bogauge/spectral.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bogauge;
using std::numbers::pi;

namespace {

double max_diff(const Field& a, const Field& b) { return (a - b).max_abs(); }

Field smooth(const PeriodicGrid& g, double amp, std::uint64_t seed, int modes = 6) {
  return Field::sample(g, oracle::TrigPoly::random(seed, modes, g.length(), amp));
}

}  // namespace

TEST_CASE("primitive of sin") {
  const PeriodicGrid g(64, 1.0);
  const Field u = Field::sample(g, [](double x) { return std::sin(2 * pi * x); });
  const double l2 = 0.5, t = 0.4;
  const GaugePrimitive P = primitive(u, t, l2);
  CHECK(P.mean_law == doctest::Approx(0.05));
  const Field expect = Field::sample(g, [](double x) { return -std::cos(2 * pi * x) / (4 * pi) + 0.05; });
  CHECK(max_diff(P.F, expect) < 1e-14);
  CHECK(max_diff(derivative(P.F, 1), u * 0.5) < 1e-12);
  CHECK(P.F.is_real());
}

TEST_CASE("primitive rejects data with a mean") {
  const PeriodicGrid g(32, 1.0);
  const Field u = Field::sample(g, [](double x) { return 0.1 + std::sin(2 * pi * x); });
  CHECK_THROWS_AS(primitive(u, 0.0, 0.5), GaugeDomainError);
}

TEST_CASE("w to first order is -i P_{+hi} F") {
  // On L = 1/4 every nonzero mode has |xi| >= 4, so all of F is high.
  const PeriodicGrid g(64, 0.25);
  const Field base = smooth(g, 1.0, 2);
  double prev = 0;
  for (double eps : {1e-2, 5e-3, 2.5e-3}) {
    const GaugePrimitive P = primitive(base * eps, 0.0, 0.0);
    const GaugeFields G = gauge_w(P);
    const Field lin = lp_project(P.F, LPSelector::plus_hi()) * cplx(0.0, -1.0);
    const double err = max_diff(G.w, lin);
    CHECK(err < 10 * P.F.max_abs() * P.F.max_abs());  // Taylor remainder is F^2 / 2
    if (prev > 0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.05));
    prev = err;
  }
}

TEST_CASE("gauge fields") {
  const PeriodicGrid g(128, 1.0);
  const Field u = smooth(g, 3.0, 3);
  const GaugePrimitive P = primitive(u, 0.2, l2_norm(u) * l2_norm(u));
  const GaugeFields G = gauge_w(P);
  for (int j = 0; j < g.size(); ++j) CHECK(std::abs(std::abs(G.exp_minus_iF[j]) - 1.0) < 1e-14);
  CHECK(max_diff(G.F_LO + G.F_plus_HI + G.F_minus_HI, P.F) < 1e-13);
  CHECK(max_diff(G.F_minus_HI, G.F_plus_HI.conj()) < 1e-14);
  // w has no mass at non-positive or low frequencies.
  CHECK(max_diff(lp_project(G.w, LPSelector::plus_hi()), G.w) < 1e-15);
  CHECK(lp_project(G.w, LPSelector::lo()).max_abs() < 1e-15);
  CHECK_THROWS_AS(gauge_w(P, 1), ContractError);
}

TEST_CASE("w equation holds at every padding >= 2") {
  const PeriodicGrid g(256, 1.0);
  const Field u = smooth(g, 2.0, 4, 8);
  const double l2 = l2_norm(u) * l2_norm(u);
  for (int pad : {2, 4}) {
    const WEquationResidual r = w_equation_residual(u, 0.1, l2, pad);
    CHECK(r.relative() < 1e-10);
    CHECK(r.terms.size() == 4);
    CHECK(r.largest_term() > 0);
  }
}

TEST_CASE("w_t agrees with a centered difference along the flow") {
  const PeriodicGrid g(128, 1.0);
  const Field u0 = smooth(g, 0.5, 5);
  const double l2 = l2_norm(u0) * l2_norm(u0);
  const double t = 0.01;

  SolverConfig c;
  c.grid = g;
  c.dt = 2.5e-6;
  c.horizon = t;
  c.capture_every = static_cast<int>(c.steps());
  const Field ut = evolve(u0, c).final();
  const Field wt = gauge_w_time_derivative(primitive(ut, t, l2));

  double prev = 0;
  for (double h : {5e-5, 2.5e-5}) {  // keep the dispersive phase omega h small
    c.horizon = h;
    c.capture_every = static_cast<int>(c.steps());
    const Field up = evolve(ut, c).final();
    c.horizon = -h;
    const Field um = evolve(ut, c).final();
    const Field wp = gauge_w(primitive(up, t + h, l2)).w;
    const Field wm = gauge_w(primitive(um, t - h, l2)).w;
    const double err = l2_norm((wp - wm) * (1.0 / (2 * h)) - wt);
    CHECK(err < 1e-2 * l2_norm(wt));
    if (prev > 0) CHECK(prev / err > 3.5);
    prev = err;
  }
}

TEST_CASE("reconstruction of d_x F_{+HI}") {
  const PeriodicGrid g(256, 1.0);
  const Field u = smooth(g, 2.0, 6, 10);
  const GaugePrimitive P = primitive(u, 0.0, 0.0);
  const GaugeFields G = gauge_w(P);
  const Reconstruction r = reconstruct_FHI(P, G);
  CHECK(r.mismatch < 1e-10 * r.lhs_norm);
  CHECK(r.lhs_norm > 0);
  CHECK(r.wx_term_norm > 0);
}

TEST_CASE("the negative-frequency cancellation term vanishes") {
  for (double L : {0.25, 1.0, 2 * pi}) {
    const PeriodicGrid g(256, L);
    const Field u = smooth(g, 4.0, 7, 12);
    const GaugePrimitive P = primitive(u, 0.0, 0.0);
    const double scale = l2_norm(riesz(derivative(P.F, 2), Half::minus));
    CHECK(cancellation_term(P) <= 1e-13 * scale);
  }
}

TEST_CASE("paraproduct pair") {
  const PeriodicGrid g(128, 1.0);
  const Field z = Field::zeros(g);
  const Field f = smooth(g, 1.0, 8);
  ParaproductPair p = paraproduct_pair(z, f);
  CHECK(p.lhs == 0.0);
  CHECK(p.rhs == 0.0);
  p = paraproduct_pair(f, z);
  CHECK(p.lhs == 0.0);
  p = paraproduct_pair(f, smooth(g, 1.0, 9));
  CHECK(p.lhs > 0.0);
  CHECK(p.lhs <= 4.0 * p.rhs);
  CHECK_THROWS_AS(paraproduct_pair(f, Field::zeros(PeriodicGrid(64, 1.0))), ContractError);
}
