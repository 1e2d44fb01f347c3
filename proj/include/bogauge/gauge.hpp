#pragma once

#include <map>
#include <string>

#include "bogauge/grid.hpp"

namespace bogauge {

/// Spatial primitive F with F_x = u / 2.
///
/// On the torus the mean of F is fixed by averaging F_t + H F_xx = F_x^2:
/// mean(F)(t) = t ||u0||^2_{L^2} / (4L), with mean(F)(0) = 0.
struct GaugePrimitive {
  Field F;
  double t = 0.0;
  double mean_law = 0.0;
  double u0_l2 = 0.0;  // ||u0||^2_{L^2}
};

/// w = P_{+hi}(e^{-iF}) together with the pieces used to build it.
struct GaugeFields {
  Field w;
  Field exp_minus_iF;  // pointwise samples, unimodular
  Field F_LO;
  Field F_plus_HI;
  Field F_minus_HI;
};

/// Throws GaugeDomainError if mean(u) is not zero to 1e-10.
GaugePrimitive primitive(const Field& u, double t, double u0_l2);

/// Evaluate e^{-iF} on a grid oversampled by `padding` (>= 2), transform,
/// truncate, then project with P_{+hi}.
GaugeFields gauge_w(const GaugePrimitive& P, int padding = 4);

struct WEquationResidual {
  double residual = 0.0;  // L^2 norm of w_t + H w_xx + 2P(..w) + 2P(..P_lo e^{-iF})
  /// L^2 sizes of: w_t, H_w_xx, paraproduct_term, low_term.
  std::map<std::string, double> terms;
  double largest_term() const;
  double relative() const;
};

/// Residual of the gauge-field equation
///   w_t + H w_xx = -2 P_{+hi}(P_-(F_xx) w) - 2 P_{+hi}(P_-(F_xx) P_lo(e^{-iF})),
/// with w_t = P_{+hi}(-i F_t e^{-iF}) and F_t = F_x^2 - H F_xx taken from the
/// primitive equation (no time differencing).
WEquationResidual w_equation_residual(const Field& u, double t, double u0_l2, int padding = 4);

/// w_t computed analytically as above; exposed for finite-difference checks.
Field gauge_w_time_derivative(const GaugePrimitive& P, int padding = 4);

/// ||P_{+hi}(P_-(F_xx) P_{-hi}(e^{-iF}))||, which vanishes by frequency support.
double cancellation_term(const GaugePrimitive& P, int padding = 4);

struct Reconstruction {
  Field reconstructed;  // i e^{iF} w_x + e^{iF} E
  Field error_term;     // E
  double mismatch = 0.0;  // ||d_x F_{+HI} - reconstructed||_{L^2}
  double lhs_norm = 0.0;  // ||d_x F_{+HI}||
  double wx_term_norm = 0.0;  // ||i e^{iF} w_x||
  double e_term_norm = 0.0;   // ||e^{iF} E||
};

/// d_x F_{+HI} = i e^{iF} w_x + e^{iF} E with
/// E = (P_lo + P_{-hi})(e^{-iF} (F_{+HI})_x) - P_{+hi}((F_{-HI})_x e^{-iF})
///     - P_{+hi}((F_{LO})_x e^{-iF}).
Reconstruction reconstruct_FHI(const GaugePrimitive& P, const GaugeFields& G, int padding = 4);

struct ParaproductPair {
  double lhs = 0.0;  // ||P_{+hi}(P_-(f) g)||_{H^2}
  double rhs = 0.0;  // ||P_-(f)||_{L^inf} ||g||_{H^2}
};

ParaproductPair paraproduct_pair(const Field& f, const Field& g);

}  // namespace bogauge
