#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

namespace bogauge {

using cplx = std::complex<double>;

/// Uniform periodic discretization of [0, L).
///
/// Sample points are x_j = j L / n. Fourier slots follow the usual FFT
/// ordering; slot j carries the mode index m = j for j <= n/2 and j - n
/// otherwise, so the mode set is {-n/2+1, ..., n/2} with the Nyquist mode
/// at +n/2. Frequencies are measured in cycles per unit length, xi = m / L.
class PeriodicGrid {
 public:
  PeriodicGrid(int n, double length);

  int size() const noexcept { return n_; }
  double length() const noexcept { return length_; }
  double spacing() const noexcept { return length_ / n_; }

  double x(int j) const noexcept { return j * length_ / n_; }

  int mode(int slot) const noexcept { return slot <= n_ / 2 ? slot : slot - n_; }
  int slot(int mode) const;
  double xi(int slot) const noexcept { return mode(slot) / length_; }
  bool is_nyquist(int slot) const noexcept { return slot == n_ / 2; }
  /// Largest resolved frequency, n / (2L).
  double max_frequency() const noexcept { return 0.5 * n_ / length_; }

  /// Same point count, domain stretched to `length`.
  PeriodicGrid with_length(double length) const { return {n_, length}; }
  /// Same length, point count multiplied by `factor`.
  PeriodicGrid refined(int factor) const { return {n_ * factor, length_}; }

  friend bool operator==(const PeriodicGrid& a, const PeriodicGrid& b) noexcept {
    return a.n_ == b.n_ && a.length_ == b.length_;
  }

 private:
  int n_;
  double length_;
};

enum class FieldKind { real, complex };

/// Samples of a function on a periodic grid.
///
/// A real-tagged field stores exactly zero imaginary parts; constructing one
/// from complex data discards the imaginary component.
class Field {
 public:
  Field(PeriodicGrid grid, std::vector<cplx> samples, FieldKind kind);

  static Field zeros(const PeriodicGrid& grid, FieldKind kind = FieldKind::real);
  static Field from_real(const PeriodicGrid& grid, std::span<const double> values);

  /// Evaluate `f` at every sample point. Real-valued callables give a real
  /// field, complex-valued ones a complex field.
  template <class Fn>
  static Field sample(const PeriodicGrid& grid, Fn&& f) {
    using R = decltype(f(0.0));
    std::vector<cplx> v(grid.size());
    for (int j = 0; j < grid.size(); ++j) v[j] = cplx(f(grid.x(j)));
    return Field(grid, std::move(v),
                 std::is_same_v<std::decay_t<R>, cplx> ? FieldKind::complex : FieldKind::real);
  }

  const PeriodicGrid& grid() const noexcept { return grid_; }
  FieldKind kind() const noexcept { return kind_; }
  bool is_real() const noexcept { return kind_ == FieldKind::real; }
  int size() const noexcept { return grid_.size(); }
  std::span<const cplx> samples() const noexcept { return samples_; }
  const cplx& operator[](int j) const noexcept { return samples_[j]; }
  std::vector<double> real_values() const;

  /// Largest sample magnitude (lattice L^infinity norm).
  double max_abs() const;
  /// Largest |Im| over the samples.
  double max_imag() const;
  /// Lattice mean (1/n) sum f_j.
  cplx mean() const;

  Field conj() const;
  Field as_complex() const { return Field(grid_, samples_, FieldKind::complex); }
  /// Keep the real part and tag the result real.
  Field real_part() const { return Field(grid_, samples_, FieldKind::real); }

  Field& operator+=(const Field& o);
  Field& operator-=(const Field& o);
  Field& operator*=(double s);
  Field& operator*=(cplx s);

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(Field a, double s) { return a *= s; }
  friend Field operator*(double s, Field a) { return a *= s; }
  friend Field operator*(Field a, cplx s) { return a *= s; }
  friend Field operator*(cplx s, Field a) { return a *= s; }

  /// Pointwise product of the samples (no dealiasing).
  friend Field pointwise(const Field& a, const Field& b);

 private:
  PeriodicGrid grid_;
  std::vector<cplx> samples_;
  FieldKind kind_;
};

/// Discrete Fourier coefficients, slot-ordered; coefficient m approximates
/// the continuum transform at xi = m / L.
class Spectrum {
 public:
  Spectrum(PeriodicGrid grid, std::vector<cplx> coeffs);
  static Spectrum zeros(const PeriodicGrid& grid);

  const PeriodicGrid& grid() const noexcept { return grid_; }
  int size() const noexcept { return grid_.size(); }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  std::span<cplx> coeffs() noexcept { return coeffs_; }
  const cplx& operator[](int slot) const noexcept { return coeffs_[slot]; }
  cplx& operator[](int slot) noexcept { return coeffs_[slot]; }
  /// Coefficient of mode m, -n/2 < m <= n/2.
  cplx at_mode(int m) const { return coeffs_[grid_.slot(m)]; }

 private:
  PeriodicGrid grid_;
  std::vector<cplx> coeffs_;
};

void require_same_grid(const PeriodicGrid& a, const PeriodicGrid& b, const char* where);

}  // namespace bogauge
