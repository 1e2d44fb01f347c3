#include "bogauge/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bogauge/errors.hpp"
#include "bogauge/littlewood_paley.hpp"
#include "bogauge/spectral.hpp"

namespace bogauge {

namespace {

void require_padding(int padding) {
  if (padding < 2)
    throw ContractError("gauge: padding must be >= 2, got " + std::to_string(padding));
}

// Pointwise e^{-iF} on the refined grid.
Field phase_fine(const Field& F, int padding) {
  const Field Ff = refine(F, padding);
  std::vector<cplx> v(Ff.size());
  for (int j = 0; j < Ff.size(); ++j) v[j] = std::exp(cplx(0.0, -Ff[j].real()));
  return Field(Ff.grid(), std::move(v), FieldKind::complex);
}

// a * e^{-iF}, formed on the refined grid and truncated back.
Field times_phase(const Field& a, const Field& phase, int padding) {
  return coarsen(pointwise(refine(a, padding), phase), padding, FieldKind::complex);
}

}  // namespace

GaugePrimitive primitive(const Field& u, double t, double u0_l2) {
  if (!u.is_real()) throw ContractError("primitive: u must be real-tagged");
  const double mean = u.mean().real();
  if (std::abs(mean) > 1e-10 * std::max(1.0, u.max_abs()))
    throw GaugeDomainError("primitive: u must have zero mean on the torus (mean=" +
                           std::to_string(mean) + ")");
  GaugePrimitive P{antiderivative(u) * 0.5, t, 0.0, u0_l2};
  P.mean_law = t * u0_l2 / (4.0 * u.grid().length());
  std::vector<double> v = P.F.real_values();
  for (auto& x : v) x += P.mean_law;
  P.F = Field::from_real(u.grid(), v);
  return P;
}

GaugeFields gauge_w(const GaugePrimitive& P, int padding) {
  require_padding(padding);
  const Field& F = P.F;
  const Field e = coarsen(phase_fine(F, padding), padding, FieldKind::complex);
  std::vector<cplx> pts(F.size());
  for (int j = 0; j < F.size(); ++j) pts[j] = std::exp(cplx(0.0, -F[j].real()));
  const LPBank lp(F.grid());
  return GaugeFields{lp.project(e, LPSelector::plus_hi()),
                     Field(F.grid(), std::move(pts), FieldKind::complex),
                     lp.project(F, LPSelector::LO()), lp.project(F, LPSelector::plus_HI()),
                     lp.project(F, LPSelector::minus_HI())};
}

Field gauge_w_time_derivative(const GaugePrimitive& P, int padding) {
  require_padding(padding);
  const Field& F = P.F;
  const Field Fx = derivative(F, 1);
  const Field Ft = padded_product(Fx, Fx, padding) - hilbert(derivative(F, 2));
  const Field rhs = times_phase(Ft, phase_fine(F, padding), padding) * cplx(0.0, -1.0);
  return lp_project(rhs, LPSelector::plus_hi());
}

double WEquationResidual::largest_term() const {
  double m = 0.0;
  for (const auto& [name, v] : terms) m = std::max(m, v);
  return m;
}

double WEquationResidual::relative() const {
  const double m = largest_term();
  return m > 0.0 ? residual / m : 0.0;
}

WEquationResidual w_equation_residual(const Field& u, double t, double u0_l2, int padding) {
  const GaugePrimitive P = primitive(u, t, u0_l2);
  const GaugeFields G = gauge_w(P, padding);
  const LPBank lp(u.grid());

  const Field e = coarsen(phase_fine(P.F, padding), padding, FieldKind::complex);
  const Field wt = gauge_w_time_derivative(P, padding);
  const Field hwxx = hilbert(derivative(G.w, 2));
  const Field fxx_minus = riesz(derivative(P.F, 2), Half::minus);
  const Field para =
      lp.project(padded_product(fxx_minus, G.w, padding), LPSelector::plus_hi()) * 2.0;
  const Field low = lp.project(padded_product(fxx_minus, lp.project(e, LPSelector::lo()), padding),
                               LPSelector::plus_hi()) *
                    2.0;

  WEquationResidual r;
  r.residual = l2_norm(wt + hwxx + para + low);
  r.terms = {{"w_t", l2_norm(wt)},
             {"H_w_xx", l2_norm(hwxx)},
             {"paraproduct_term", l2_norm(para)},
             {"low_term", l2_norm(low)}};
  return r;
}

double cancellation_term(const GaugePrimitive& P, int padding) {
  require_padding(padding);
  const LPBank lp(P.F.grid());
  const Field fxx_minus = riesz(derivative(P.F, 2), Half::minus);
  const Field e = coarsen(phase_fine(P.F, padding), padding, FieldKind::complex);
  const Field neg = lp.project(e, LPSelector::minus_hi());
  return l2_norm(lp.project(padded_product(fxx_minus, neg, padding), LPSelector::plus_hi()));
}

Reconstruction reconstruct_FHI(const GaugePrimitive& P, const GaugeFields& G, int padding) {
  require_padding(padding);
  require_same_grid(P.F.grid(), G.w.grid(), "reconstruct_FHI");
  const LPBank lp(P.F.grid());
  const Field phase = phase_fine(P.F, padding);

  const Field fx_plus = derivative(G.F_plus_HI, 1);
  const Field a = times_phase(fx_plus, phase, padding);
  const Field b = times_phase(derivative(G.F_minus_HI, 1), phase, padding);
  const Field c = times_phase(derivative(G.F_LO, 1), phase, padding);
  const Field E = lp.project(a, LPSelector::lo()) + lp.project(a, LPSelector::minus_hi()) -
                  lp.project(b, LPSelector::plus_hi()) - lp.project(c, LPSelector::plus_hi());

  const Field e_plus = G.exp_minus_iF.conj();
  const Field wx_term = pointwise(e_plus, derivative(G.w, 1)) * cplx(0.0, 1.0);
  const Field e_term = pointwise(e_plus, E);

  Reconstruction r{wx_term + e_term, E, 0.0};
  r.mismatch = l2_norm(fx_plus - r.reconstructed);
  r.lhs_norm = l2_norm(fx_plus);
  r.wx_term_norm = l2_norm(wx_term);
  r.e_term_norm = l2_norm(e_term);
  return r;
}

ParaproductPair paraproduct_pair(const Field& f, const Field& g) {
  require_same_grid(f.grid(), g.grid(), "paraproduct_pair");
  const Field pm = riesz(f, Half::minus);
  const Field prod = padded_product(pm, g, 2);
  return {sobolev_norm(lp_project(prod, LPSelector::plus_hi()), 2.0),
          pm.max_abs() * sobolev_norm(g, 2.0)};
}

}  // namespace bogauge
