#pragma once

#include <functional>

#include "bogauge/grid.hpp"

namespace bogauge {

/// A Fourier multiplier, evaluated at absolute frequency xi (cycles per unit
/// length).
using Symbol = std::function<cplx(double xi)>;

/// Forward transform with continuum normalization:
/// c_m = (L/n) sum_j f(x_j) e^{-2 pi i x_j xi_m}.
Spectrum to_spectrum(const Field& f);

/// Inverse of to_spectrum. A real `kind` drops the imaginary part.
Field to_field(const Spectrum& s, FieldKind kind = FieldKind::complex);

/// Multiply every coefficient by symbol(xi_m).
///
/// The Nyquist slot stands for both +xi_N and -xi_N and is multiplied by the
/// even part (symbol(xi_N) + symbol(-xi_N)) / 2: odd symbols annihilate it,
/// even symbols carry it unchanged, and real-preserving symbols keep it real.
/// Throws ContractError naming the mode when the symbol is not finite.
Spectrum apply_multiplier(const Spectrum& s, const Symbol& symbol);

/// Field-level convenience: transform, multiply, transform back.
Field apply_multiplier(const Field& f, const Symbol& symbol, FieldKind out_kind);

/// Hilbert transform, symbol -i sgn(xi) with sgn(0) = 0.
Field hilbert(const Field& f);

/// Spectral derivative of the given order (0..4), symbol (2 pi i xi)^order.
Field derivative(const Field& f, int order = 1);

/// Zero-mean spectral antiderivative, symbol 1 / (2 pi i xi) off the origin.
Field antiderivative(const Field& f);

enum class Half { plus, minus };

/// Riesz projection onto positive (plus) or negative (minus) frequencies.
/// The zero mode is split evenly so that P_+ + P_- = Id exactly.
Field riesz(const Field& f, Half half);

double riesz_symbol(Half half, double xi);

/// Lattice inner product <f, g> = sum_j f_j conj(g_j) L/n.
cplx inner(const Field& f, const Field& g);
/// Lattice integral sum_j f_j L/n.
cplx integral(const Field& f);
double l2_norm(const Field& f);

/// ||f||_{H^s} = (sum_m <xi_m>^{2s} |c_m|^2 / L)^{1/2}, <xi> = (1 + xi^2)^{1/2}.
double sobolev_norm(const Field& f, double s);
double sobolev_norm(const Spectrum& s, double order);

// Band-limited resampling used to evaluate nonlinear expressions with
// reduced aliasing: refine() zero-pads the spectrum onto a grid `factor`
// times finer, coarsen() transforms and truncates back.

Spectrum pad(const Spectrum& s, int factor);
Spectrum truncate(const Spectrum& s, int n);
Field refine(const Field& f, int factor);
Field coarsen(const Field& fine, int factor, FieldKind kind);

/// Product of two fields evaluated on a grid refined by `padding` and
/// truncated back. Exact for band-limited inputs once padding >= 2.
Field padded_product(const Field& a, const Field& b, int padding);

}  // namespace bogauge
