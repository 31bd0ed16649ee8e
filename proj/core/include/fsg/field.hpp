#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fsg/grid.hpp"

namespace fsg {

using Complex = std::complex<double>;

enum class Space { Physical, Spectral };

/// Complex binary64 samples on a GridSpec, row-major over dimension order.
/// Spectral fields store coefficients in FFT bin order (see frequency_of_bin).
class Field {
 public:
  Field() = default;
  Field(GridSpec grid, Space space);
  Field(GridSpec grid, Space space, std::vector<Complex> values);

  /// Samples fn at every node; fn receives the node coordinates.
  static Field sample(const GridSpec& grid, const std::function<Complex(std::span<const double>)>& fn);
  static Field from_real(const GridSpec& grid, std::span<const double> values);

  const GridSpec& grid() const { return grid_; }
  Space space() const { return space_; }
  std::size_t size() const { return values_.size(); }

  std::span<Complex> values() { return values_; }
  std::span<const Complex> values() const { return values_; }
  Complex& operator[](std::size_t i) { return values_[i]; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }

  double max_abs() const;
  double max_abs_imag() const;
  /// max|imag| <= rel_tol * max|value|.
  bool is_real(double rel_tol = 1e-12) const;
  bool all_finite() const;

  std::vector<double> real_part() const;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(Complex scale);

 private:
  void require_compatible(const Field& other) const;

  GridSpec grid_;
  Space space_ = Space::Physical;
  std::vector<Complex> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(Complex scale, Field a);

/// Throws ValidationError unless the field is in the expected space.
void require_space(const Field& f, Space expected, const char* what);

}  // namespace fsg
