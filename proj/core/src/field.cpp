#include "fsg/field.hpp"

#include <algorithm>
#include <cmath>

#include "fsg/error.hpp"

namespace fsg {

Field::Field(GridSpec grid, Space space)
    : grid_(std::move(grid)), space_(space), values_(grid_.size(), Complex{}) {}

Field::Field(GridSpec grid, Space space, std::vector<Complex> values)
    : grid_(std::move(grid)), space_(space), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw ValidationError("field: value count " + std::to_string(values_.size()) +
                          " does not match grid size " + std::to_string(grid_.size()));
  }
}

Field Field::sample(const GridSpec& grid, const std::function<Complex(std::span<const double>)>& fn) {
  Field f(grid, Space::Physical);
  const int d = grid.dim();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> x(static_cast<std::size_t>(d));
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    for (int i = 0; i < d; ++i) x[i] = grid.node(i, idx[i]);
    f.values_[flat] = fn(x);
    for (int i = d - 1; i >= 0; --i) {
      if (++idx[i] < grid.points(i)) break;
      idx[i] = 0;
    }
  }
  return f;
}

Field Field::from_real(const GridSpec& grid, std::span<const double> values) {
  std::vector<Complex> v(values.begin(), values.end());
  return Field(grid, Space::Physical, std::move(v));
}

double Field::max_abs() const {
  double m = 0.0;
  for (const auto& z : values_) m = std::max(m, std::abs(z));
  return m;
}

double Field::max_abs_imag() const {
  double m = 0.0;
  for (const auto& z : values_) m = std::max(m, std::abs(z.imag()));
  return m;
}

bool Field::is_real(double rel_tol) const { return max_abs_imag() <= rel_tol * max_abs(); }

bool Field::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

std::vector<double> Field::real_part() const {
  std::vector<double> r(values_.size());
  std::transform(values_.begin(), values_.end(), r.begin(), [](const Complex& z) { return z.real(); });
  return r;
}

void Field::require_compatible(const Field& other) const {
  if (!(grid_ == other.grid_) || space_ != other.space_) {
    throw ValidationError("field: arithmetic on fields with different grids or spaces");
  }
}

Field& Field::operator+=(const Field& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Field& Field::operator*=(Complex scale) {
  for (auto& z : values_) z *= scale;
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(Complex scale, Field a) { return a *= scale; }

void require_space(const Field& f, Space expected, const char* what) {
  if (f.space() != expected) {
    throw ValidationError(std::string(what) + ": expected a " +
                          (expected == Space::Physical ? "physical" : "spectral") + "-space field");
  }
}

}  // namespace fsg
