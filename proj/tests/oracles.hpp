#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library's transform layer.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
constexpr double pi = 3.14159265358979323846;

// c_m = (L/n) sum_j f_j e^{-2 pi i j m / n}, slots in FFT order.
inline std::vector<cplx> naive_dft(const std::vector<cplx>& f, double L) {
  const std::size_t n = f.size();
  std::vector<cplx> c(n);
  for (std::size_t m = 0; m < n; ++m) {
    cplx s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce j*m mod n first so the angle stays small and exact.
      const double ang = -2.0 * pi * static_cast<double>((j * m) % n) / n;
      s += f[j] * cplx(std::cos(ang), std::sin(ang));
    }
    c[m] = s * (L / n);
  }
  return c;
}

// Trapezoid rule on a uniform periodic grid.
inline double trapezoid(const std::vector<double>& v, double L) {
  double s = 0;
  for (double x : v) s += x;
  return s * L / v.size();
}

// Centered second-order difference.
inline std::vector<double> centered_diff(const std::vector<double>& v, double L) {
  const std::size_t n = v.size();
  const double h = L / n;
  std::vector<double> d(n);
  for (std::size_t j = 0; j < n; ++j) d[j] = (v[(j + 1) % n] - v[(j + n - 1) % n]) / (2 * h);
  return d;
}

// A real trigonometric polynomial with explicit coefficients, evaluated
// pointwise; derivatives and Hilbert transform from the coefficients.
struct TrigPoly {
  double L = 1.0;
  std::vector<double> a, b;  // a[m] cos + b[m] sin, m >= 1

  static TrigPoly random(std::uint64_t seed, int modes, double L, double amp = 1.0) {
    std::mt19937_64 g(seed);
    TrigPoly p;
    p.L = L;
    p.a.assign(modes + 1, 0.0);
    p.b.assign(modes + 1, 0.0);
    for (int m = 1; m <= modes; ++m) {
      p.a[m] = amp * ((g() >> 11) * 0x1.0p-53 * 2 - 1);
      p.b[m] = amp * ((g() >> 11) * 0x1.0p-53 * 2 - 1);
    }
    return p;
  }
  double k(int m) const { return 2 * pi * m / L; }
  double operator()(double x) const {
    double v = 0;
    for (std::size_t m = 1; m < a.size(); ++m) v += a[m] * std::cos(k(m) * x) + b[m] * std::sin(k(m) * x);
    return v;
  }
  double dx(double x, int order = 1) const {
    double v = 0;
    for (std::size_t m = 1; m < a.size(); ++m) {
      const double km = k(m), ph = order * pi / 2;
      v += std::pow(km, order) * (a[m] * std::cos(km * x + ph) + b[m] * std::sin(km * x + ph));
    }
    return v;
  }
  // H cos = sin, H sin = -cos for positive frequencies.
  double hilbert(double x) const {
    double v = 0;
    for (std::size_t m = 1; m < a.size(); ++m) v += a[m] * std::sin(k(m) * x) - b[m] * std::cos(k(m) * x);
    return v;
  }
  double hilbert_dx(double x, int order) const {
    double v = 0;
    for (std::size_t m = 1; m < a.size(); ++m) {
      const double km = k(m), ph = order * pi / 2;
      v += std::pow(km, order) * (a[m] * std::sin(km * x + ph) - b[m] * std::cos(km * x + ph));
    }
    return v;
  }
};

}  // namespace oracle
