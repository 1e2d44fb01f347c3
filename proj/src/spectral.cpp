#include "bogauge/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bogauge/errors.hpp"
#include "fft.hpp"

namespace bogauge {

using std::numbers::pi;

Spectrum to_spectrum(const Field& f) {
  const auto& g = f.grid();
  std::vector<cplx> c(g.size());
  detail::dft_forward(f.samples(), c);
  const double scale = g.spacing();
  for (auto& v : c) v *= scale;
  return Spectrum(g, std::move(c));
}

Field to_field(const Spectrum& s, FieldKind kind) {
  const auto& g = s.grid();
  std::vector<cplx> v(g.size());
  detail::dft_backward(s.coeffs(), v);
  const double scale = 1.0 / g.length();
  for (auto& x : v) x *= scale;
  return Field(g, std::move(v), kind);
}

Spectrum apply_multiplier(const Spectrum& s, const Symbol& symbol) {
  const auto& g = s.grid();
  std::vector<cplx> out(g.size());
  for (int j = 0; j < g.size(); ++j) {
    const double xi = g.xi(j);
    cplx m = g.is_nyquist(j) ? 0.5 * (symbol(xi) + symbol(-xi)) : symbol(xi);
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag()))
      throw ContractError("apply_multiplier: non-finite symbol at mode " +
                          std::to_string(g.mode(j)) + " (xi=" + std::to_string(xi) + ")");
    out[j] = s[j] * m;
  }
  return Spectrum(g, std::move(out));
}

Field apply_multiplier(const Field& f, const Symbol& symbol, FieldKind out_kind) {
  return to_field(apply_multiplier(to_spectrum(f), symbol), out_kind);
}

namespace {
double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }
}  // namespace

Field hilbert(const Field& f) {
  return apply_multiplier(
      f, [](double xi) { return cplx(0.0, -sgn(xi)); }, f.kind());
}

Field derivative(const Field& f, int order) {
  if (order < 0 || order > 4)
    throw ContractError("derivative: order must be in 0..4, got " + std::to_string(order));
  if (order == 0) return f;
  return apply_multiplier(
      f,
      [order](double xi) {
        const cplx k(0.0, 2.0 * pi * xi);
        cplx r = k;
        for (int i = 1; i < order; ++i) r *= k;
        return r;
      },
      f.kind());
}

Field antiderivative(const Field& f) {
  return apply_multiplier(
      f,
      [](double xi) { return xi == 0.0 ? cplx(0.0) : 1.0 / cplx(0.0, 2.0 * pi * xi); },
      f.kind());
}

double riesz_symbol(Half half, double xi) {
  if (xi == 0.0) return 0.5;
  return (half == Half::plus) == (xi > 0.0) ? 1.0 : 0.0;
}

Field riesz(const Field& f, Half half) {
  return apply_multiplier(
      f, [half](double xi) { return cplx(riesz_symbol(half, xi)); }, FieldKind::complex);
}

cplx inner(const Field& f, const Field& g) {
  require_same_grid(f.grid(), g.grid(), "inner");
  cplx acc = 0.0;
  for (int j = 0; j < f.size(); ++j) acc += f[j] * std::conj(g[j]);
  return acc * f.grid().spacing();
}

cplx integral(const Field& f) {
  cplx acc = 0.0;
  for (const auto& v : f.samples()) acc += v;
  return acc * f.grid().spacing();
}

double l2_norm(const Field& f) {
  double acc = 0.0;
  for (const auto& v : f.samples()) acc += std::norm(v);
  return std::sqrt(acc * f.grid().spacing());
}

double sobolev_norm(const Spectrum& s, double order) {
  const auto& g = s.grid();
  double acc = 0.0;
  for (int j = 0; j < g.size(); ++j) {
    const double xi = g.xi(j);
    acc += std::pow(1.0 + xi * xi, order) * std::norm(s[j]);
  }
  return std::sqrt(acc / g.length());
}

double sobolev_norm(const Field& f, double s) { return sobolev_norm(to_spectrum(f), s); }

Spectrum pad(const Spectrum& s, int factor) {
  if (factor < 1) throw ContractError("pad: factor must be >= 1");
  const auto& g = s.grid();
  if (factor == 1) return s;
  const PeriodicGrid fine = g.refined(factor);
  std::vector<cplx> c(fine.size());
  for (int j = 0; j < g.size(); ++j) {
    const int m = g.mode(j);
    if (g.is_nyquist(j)) {
      c[fine.slot(m)] += 0.5 * s[j];
      c[fine.slot(-m)] += 0.5 * s[j];
    } else {
      c[fine.slot(m)] = s[j];
    }
  }
  return Spectrum(fine, std::move(c));
}

Spectrum truncate(const Spectrum& s, int n) {
  const auto& g = s.grid();
  if (n > g.size() || n < 2 || n % 2 != 0)
    throw ContractError("truncate: target size must be even and <= " + std::to_string(g.size()));
  if (n == g.size()) return s;
  const PeriodicGrid coarse(n, g.length());
  std::vector<cplx> c(n);
  for (int j = 0; j < n; ++j) {
    const int m = coarse.mode(j);
    c[j] = s.at_mode(m);
    if (coarse.is_nyquist(j)) c[j] += s.at_mode(-m);
  }
  return Spectrum(coarse, std::move(c));
}

Field refine(const Field& f, int factor) {
  if (factor == 1) return f;
  return to_field(pad(to_spectrum(f), factor), f.kind());
}

Field coarsen(const Field& fine, int factor, FieldKind kind) {
  if (factor < 1 || fine.size() % (2 * factor) != 0)
    throw ContractError("coarsen: grid of size " + std::to_string(fine.size()) +
                        " cannot be reduced by factor " + std::to_string(factor));
  if (factor == 1) return Field(fine.grid(), {fine.samples().begin(), fine.samples().end()}, kind);
  return to_field(truncate(to_spectrum(fine), fine.size() / factor), kind);
}

Field padded_product(const Field& a, const Field& b, int padding) {
  require_same_grid(a.grid(), b.grid(), "padded_product");
  const Field p = pointwise(refine(a, padding), refine(b, padding));
  return coarsen(p, padding, p.kind());
}

}  // namespace bogauge
