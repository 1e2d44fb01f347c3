#include <cmath>
#include <numbers>

#include "bogauge/data.hpp"
#include "bogauge/errors.hpp"
#include "bogauge/solver.hpp"
#include "bogauge/spectral.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bogauge;
using std::numbers::pi;

namespace {

double max_diff(const Field& a, const Field& b) { return (a - b).max_abs(); }

Field smooth_datum(const PeriodicGrid& g, double amp, std::uint64_t seed = 1) {
  return Field::sample(g, oracle::TrigPoly::random(seed, 6, g.length(), amp));
}

}  // namespace

TEST_CASE("config validation") {
  SolverConfig c;
  c.dt = 0.0;
  CHECK_THROWS_AS(c.validate(), ContractError);
  c.dt = 0.3;
  c.horizon = 1.0;
  CHECK_THROWS_AS(c.validate(), ContractError);  // not a multiple
  c.dt = 0.25;
  c.capture_every = 3;
  CHECK_THROWS_AS(c.validate(), ContractError);
  c.capture_every = 2;
  CHECK_NOTHROW(c.validate());
  c.dt = 2.0;
  CHECK_THROWS_AS(c.validate(), ContractError);
}

TEST_CASE("bo_rhs") {
  const PeriodicGrid g(64, 1.0);
  CHECK(bo_rhs(Field::zeros(g)).max_abs() == 0.0);

  // Linear part on sin(2 pi x / L): -H u_xx = -(2 pi/L)^2 cos(2 pi x/L).
  for (double L : {1.0, 3.0}) {
    const PeriodicGrid gl(64, L);
    const double k = 2 * pi / L;
    const Field s = Field::sample(gl, [k](double x) { return std::sin(k * x); });
    const Field expect = Field::sample(gl, [k](double x) { return -k * k * std::cos(k * x); });
    CHECK(max_diff(bo_linear(s), expect) < 1e-10);
    CHECK(max_diff(bo_rhs(s, true, false), expect) < 1e-10);
  }

  // Nonlinear term against a pointwise product on a 2x zero-padded grid.
  // Ten modes keep u^2 inside the 2/3 band, so dealiasing is invisible.
  const auto p = oracle::TrigPoly::random(4, 10, 1.0);
  const Field u = Field::sample(g, p);
  const Field rhs = bo_rhs(u, true) - bo_linear(u);
  const Field oracle_term = derivative(padded_product(u, u, 2), 1) * 0.5;
  CHECK(max_diff(rhs, oracle_term) < 1e-12 * oracle_term.max_abs());
  // And against the analytic u u_x (band-limited, so exact).
  double err = 0;
  for (int j = 0; j < g.size(); ++j) err = std::max(err, std::abs(rhs[j].real() - p(g.x(j)) * p.dx(g.x(j))));
  CHECK(err < 1e-11 * oracle_term.max_abs());
  CHECK(rhs.is_real());
}

TEST_CASE("linear flow is propagated exactly") {
  for (double dt : {1e-3, 0.1, 0.77}) {
    const PeriodicGrid g(64, 1.0);
    const Field s = Field::sample(g, [](double x) { return std::sin(2 * pi * x); });
    StepOptions o;
    o.nonlinear = false;
    const Field out = step(s, dt, o);
    // u_t = -H u_xx -> sin(2 pi (x) + 4 pi^2 ... ) phase advance by omega = (2 pi)^2.
    const double w = 4 * pi * pi;
    const Field expect = Field::sample(g, [&](double x) { return std::sin(2 * pi * x - w * dt); });
    CHECK(max_diff(out, expect) < 1e-12);
    CHECK(max_diff(out, linear_propagate(s, dt)) < 1e-12);
  }
}

TEST_CASE("step approaches the right-hand side at first order") {
  const PeriodicGrid g(64, 1.0);
  const Field u = smooth_datum(g, 0.3);
  const Field rhs = bo_rhs(u);
  double prev = 0;
  for (double dt : {1e-4, 5e-5, 2.5e-5}) {
    const Field q = (step(u, dt) - u) * (1.0 / dt);
    const double err = max_diff(q, rhs);
    if (prev > 0) CHECK(prev / err == doctest::Approx(2.0).epsilon(0.05));
    prev = err;
  }
}

TEST_CASE("evolve records snapshots and diagnostics") {
  const PeriodicGrid g(32, 1.0);
  SolverConfig c;
  c.grid = g;
  c.dt = 0.01;
  c.horizon = 0.1;
  c.capture_every = 5;
  const Trajectory z = evolve(Field::zeros(g), c);
  CHECK(z.size() == 3);
  for (const auto& s : z.snapshots) CHECK(s.max_abs() == 0.0);
  CHECK(z.times[1] == doctest::Approx(0.05));
  for (const char* key : {"l2", "hamiltonian", "h1q", "mean", "max_abs", "h1_norm", "imag_contamination"})
    CHECK(z.diagnostics.at(key).size() == 3);

  const Field offset = Field::sample(g, [](double x) { return 1.0 + std::sin(2 * pi * x); });
  CHECK_THROWS_AS(evolve(offset, c), ContractError);
  CHECK_THROWS_AS(evolve(Field::zeros(PeriodicGrid(64, 1.0)), c), ContractError);
}

TEST_CASE("mean and realness are preserved") {
  const PeriodicGrid g(128, 1.0);
  SolverConfig c;
  c.grid = g;
  c.dt = 1e-4;
  c.horizon = 0.02;
  c.capture_every = 20;
  const Trajectory t = evolve(smooth_datum(g, 0.5), c);
  for (double m : t.diagnostics.at("mean")) CHECK(std::abs(m) < 1e-12);
  for (double r : t.diagnostics.at("imag_contamination")) CHECK(r <= 1e-10);
}

TEST_CASE("blowup guard reports the time") {
  const PeriodicGrid g(64, 1.0);
  SolverConfig c;
  c.grid = g;
  c.dt = 1e-3;
  c.horizon = 0.01;
  c.blowup_threshold = 0.1;
  try {
    evolve(Field::sample(g, [](double x) { return std::sin(2 * pi * x); }), c);
    FAIL("expected blowup");
  } catch (const BlowupError& e) {
    CHECK(e.time() == 0.0);
  }
}

TEST_CASE("conserved quantities for sin(x) on 2 pi") {
  const PeriodicGrid g(64, 2 * pi);
  const ConservedTriple c = conserved(Field::sample(g, [](double x) { return std::sin(x); }));
  CHECK(c.l2 == doctest::Approx(pi).epsilon(1e-12));
  CHECK(c.hamiltonian == doctest::Approx(pi).epsilon(1e-12));
  // int u_x^2 = pi, int u^2 H u_x = 0, int u^4 = 3 pi / 4; with the +1/8
  // quartic term this is pi + 3 pi / 32.
  CHECK(c.h1q == doctest::Approx(35 * pi / 32).epsilon(1e-12));
}

TEST_CASE("conserved quantities against quadrature of analytic integrands") {
  const double L = 1.7;
  const auto p = oracle::TrigPoly::random(21, 5, L, 0.4);
  const PeriodicGrid g(256, L);
  const ConservedTriple c = conserved(Field::sample(g, p));
  std::vector<double> q1, q2, q3;
  for (int j = 0; j < g.size(); ++j) {
    const double x = g.x(j), u = p(x), ux = p.dx(x), hux = p.hilbert_dx(x, 1);
    q1.push_back(u * u);
    q2.push_back(u * hux - u * u * u / 3);
    q3.push_back(ux * ux - 0.75 * u * u * hux + 0.125 * u * u * u * u);
  }
  CHECK(c.l2 == doctest::Approx(oracle::trapezoid(q1, L)).epsilon(1e-12));
  CHECK(c.hamiltonian == doctest::Approx(oracle::trapezoid(q2, L)).epsilon(1e-12));
  CHECK(c.h1q == doctest::Approx(oracle::trapezoid(q3, L)).epsilon(1e-12));
}

TEST_CASE("invariants are conserved") {
  const PeriodicGrid g(128, 1.0);
  SolverConfig c;
  c.grid = g;
  c.dt = 2e-5;
  c.horizon = 0.02;
  c.capture_every = 100;
  const Trajectory t = evolve(smooth_datum(g, 0.5, 3), c);
  for (const char* key : {"l2", "hamiltonian", "h1q"}) {
    const auto& q = t.diagnostics.at(key);
    for (double v : q) CHECK(std::abs(v - q.front()) <= 1e-9 * std::abs(q.front()));
  }
}

TEST_CASE("temporal self-convergence is fourth order") {
  const PeriodicGrid g(64, 1.0);
  const Field u0 = smooth_datum(g, 0.05, 5);
  auto run = [&](double dt) {
    SolverConfig c;
    c.grid = g;
    c.dt = dt;
    c.horizon = 0.1;
    c.capture_every = static_cast<int>(c.steps());
    return evolve(u0, c).final();
  };
  const double h = 1.25e-3;
  const Field ref = run(h / 8);
  const double e1 = l2_norm(run(2 * h) - ref), e2 = l2_norm(run(h) - ref);
  CHECK(std::log2(e1 / e2) >= 3.9);
}

TEST_CASE("time reversal round trip") {
  const PeriodicGrid g(64, 1.0);
  const Field u0 = smooth_datum(g, 0.05, 6);
  auto round_trip = [&](double dt) {
    SolverConfig c;
    c.grid = g;
    c.dt = dt;
    c.horizon = 0.05;
    c.capture_every = static_cast<int>(c.steps());
    const Field fwd = evolve(u0, c).final();
    c.horizon = -0.05;
    const Trajectory back = evolve(fwd, c);
    CHECK(back.times.back() == doctest::Approx(-0.05));
    return l2_norm(back.final() - u0);
  };
  const double e1 = round_trip(1.25e-3), e2 = round_trip(6.25e-4);
  CHECK(e1 < 1e-3 * l2_norm(u0));
  CHECK(std::log2(e1 / e2) >= 3.5);
}

TEST_CASE("rescale") {
  const PeriodicGrid g(64, 1.0);
  const Field u = smooth_datum(g, 1.0, 7);
  const Field same = rescale(u, 1.0);
  CHECK(max_diff(same, u) == 0.0);
  for (double lam : {0.5, 2.0, 3.0}) {
    const Field r = rescale(u, lam);
    CHECK(r.grid().length() == doctest::Approx(lam));
    CHECK(l2_norm(r) == doctest::Approx(l2_norm(u) / std::sqrt(lam)).epsilon(1e-12));
    const double hd = l2_norm(derivative(r, 1)), hd0 = l2_norm(derivative(u, 1));
    CHECK(hd == doctest::Approx(hd0 * std::pow(lam, -1.5)).epsilon(1e-12));
    // The rescaled datum's right-hand side is the rescaled one scaled by lambda^-2.
    const Field lhs = bo_rhs(r);
    const Field rhs = rescale(bo_rhs(u), lam) * (1.0 / (lam * lam));
    CHECK(max_diff(lhs, Field(lhs.grid(), {rhs.samples().begin(), rhs.samples().end()}, FieldKind::real)) <
          1e-10 * lhs.max_abs());
  }
  CHECK_THROWS_AS(rescale(u, 0.0), ContractError);
}

TEST_CASE("traveling wave matches the closed form and solves the profile equation") {
  const double L = 2 * pi, a = 0.2;
  const PeriodicGrid g(256, L);
  const TravelingWave tw = traveling_wave(g, a);
  CHECK(tw.residual <= 1e-8);
  // Closed forms for this profile family.
  CHECK(tw.beta == doctest::Approx(4 * pi / L).epsilon(1e-10));
  CHECK(tw.speed == doctest::Approx(2 * pi / L * (1 - 3 * a * a) / (1 - a * a)).epsilon(1e-10));

  // Independent residual oracle from the conjugate Poisson kernel.
  const double th0 = 2 * pi / L;
  double worst = 0;
  for (int j = 0; j < g.size(); ++j) {
    const double th = th0 * g.x(j), D = 1 - 2 * a * std::cos(th) + a * a;
    const double P = (1 - a * a) / D - 1;
    const double Pp = -(1 - a * a) * 2 * a * std::sin(th) * th0 / (D * D);
    // H(P_a - 1) = Q_a = 2a sin / D; H phi'' = beta Q_a''.
    auto Q = [&](double t) { return 2 * a * std::sin(t) / (1 - 2 * a * std::cos(t) + a * a); };
    const double h = 1e-3;
    const double Qpp = (-Q(th + 2 * h) + 16 * Q(th + h) - 30 * Q(th) + 16 * Q(th - h) - Q(th - 2 * h)) /
                       (12 * h * h) * th0 * th0;
    const double b = tw.beta, c = tw.speed;
    worst = std::max(worst, std::abs(-c * b * Pp + b * Qpp - b * b * P * Pp));
  }
  CHECK(worst <= 1e-8 * 100);  // FD stencil error ~ h^4
}
