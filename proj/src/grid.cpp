#include "bogauge/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bogauge/errors.hpp"

namespace bogauge {

PeriodicGrid::PeriodicGrid(int n, double length) : n_(n), length_(length) {
  if (n < 2 || n % 2 != 0)
    throw ContractError("PeriodicGrid: sample count must be a positive even integer, got " +
                        std::to_string(n));
  if (!(length > 0.0) || !std::isfinite(length))
    throw ContractError("PeriodicGrid: length must be positive and finite");
}

int PeriodicGrid::slot(int mode) const {
  if (mode <= -n_ / 2 || mode > n_ / 2)
    throw ContractError("PeriodicGrid: mode " + std::to_string(mode) + " not on an n=" +
                        std::to_string(n_) + " lattice");
  return mode >= 0 ? mode : mode + n_;
}

void require_same_grid(const PeriodicGrid& a, const PeriodicGrid& b, const char* where) {
  if (!(a == b))
    throw ContractError(std::string(where) + ": grid mismatch (n=" + std::to_string(a.size()) +
                        ", L=" + std::to_string(a.length()) + " vs n=" + std::to_string(b.size()) +
                        ", L=" + std::to_string(b.length()) + ")");
}

Field::Field(PeriodicGrid grid, std::vector<cplx> samples, FieldKind kind)
    : grid_(grid), samples_(std::move(samples)), kind_(kind) {
  if (static_cast<int>(samples_.size()) != grid_.size())
    throw ContractError("Field: sample count does not match grid size");
  if (kind_ == FieldKind::real)
    for (auto& s : samples_) s = cplx(s.real(), 0.0);
}

Field Field::zeros(const PeriodicGrid& grid, FieldKind kind) {
  return Field(grid, std::vector<cplx>(grid.size()), kind);
}

Field Field::from_real(const PeriodicGrid& grid, std::span<const double> values) {
  if (static_cast<int>(values.size()) != grid.size())
    throw ContractError("Field::from_real: value count does not match grid size");
  return Field(grid, std::vector<cplx>(values.begin(), values.end()), FieldKind::real);
}

std::vector<double> Field::real_values() const {
  std::vector<double> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(),
                 [](const cplx& z) { return z.real(); });
  return out;
}

double Field::max_abs() const {
  double m = 0.0;
  for (const auto& s : samples_) m = std::max(m, std::abs(s));
  return m;
}

double Field::max_imag() const {
  double m = 0.0;
  for (const auto& s : samples_) m = std::max(m, std::abs(s.imag()));
  return m;
}

cplx Field::mean() const {
  cplx acc = 0.0;
  for (const auto& s : samples_) acc += s;
  return acc / static_cast<double>(samples_.size());
}

Field Field::conj() const {
  std::vector<cplx> v(samples_.size());
  std::transform(samples_.begin(), samples_.end(), v.begin(),
                 [](const cplx& z) { return std::conj(z); });
  return Field(grid_, std::move(v), kind_);
}

namespace {
FieldKind combine(FieldKind a, FieldKind b) {
  return a == FieldKind::real && b == FieldKind::real ? FieldKind::real : FieldKind::complex;
}
}  // namespace

Field& Field::operator+=(const Field& o) {
  require_same_grid(grid_, o.grid_, "Field::operator+");
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] += o.samples_[j];
  kind_ = combine(kind_, o.kind_);
  return *this;
}

Field& Field::operator-=(const Field& o) {
  require_same_grid(grid_, o.grid_, "Field::operator-");
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] -= o.samples_[j];
  kind_ = combine(kind_, o.kind_);
  return *this;
}

Field& Field::operator*=(double s) {
  for (auto& v : samples_) v *= s;
  return *this;
}

Field& Field::operator*=(cplx s) {
  for (auto& v : samples_) v *= s;
  if (s.imag() != 0.0) kind_ = FieldKind::complex;
  return *this;
}

Field pointwise(const Field& a, const Field& b) {
  require_same_grid(a.grid_, b.grid_, "pointwise");
  std::vector<cplx> v(a.samples_.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.samples_[j] * b.samples_[j];
  return Field(a.grid_, std::move(v), combine(a.kind_, b.kind_));
}

Spectrum::Spectrum(PeriodicGrid grid, std::vector<cplx> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != grid_.size())
    throw ContractError("Spectrum: coefficient count does not match grid size");
}

Spectrum Spectrum::zeros(const PeriodicGrid& grid) {
  return Spectrum(grid, std::vector<cplx>(grid.size()));
}

}  // namespace bogauge
