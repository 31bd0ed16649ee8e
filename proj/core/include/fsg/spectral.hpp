#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "fsg/field.hpp"
#include "fsg/grid.hpp"

namespace fsg {

/// Diagonal Fourier multipliers for one (grid, alpha) pair, in FFT bin order.
///
/// For the multi-index k with per-dimension frequencies mu_i = 2 pi k_i / (b_i - a_i):
///   frac_lap(k) = |mu k|^alpha = (sum_i mu_i^2)^(alpha/2)
///   delta(k)    = sqrt(1 + frac_lap(k))
/// delta is the symbol of the relativistic operator sqrt(1 + (-Laplacian)^(alpha/2)).
class SymbolSet {
 public:
  SymbolSet(GridSpec grid, double alpha);

  const GridSpec& grid() const { return grid_; }
  double alpha() const { return alpha_; }

  /// Frequencies mu_k of dimension i, indexed by storage bin.
  std::span<const double> mu(int i) const { return mu_[i]; }
  std::span<const double> mu_squared() const { return mu_sq_; }
  std::span<const double> delta() const { return delta_; }
  std::span<const double> inverse_delta() const { return inv_delta_; }
  std::span<const double> frac_lap() const { return frac_lap_; }

  /// e^{i t delta_k}.
  std::vector<Complex> phase(double t) const;
  /// |mu k|^(alpha * power); power = 1/2 gives the (-Laplacian)^(alpha/4) symbol.
  std::vector<double> frac_lap_power(double power) const;
  /// (1 + |mu k|^2)^(s/2), the H^s weight on coefficient magnitudes.
  std::vector<double> sobolev_multiplier(double s) const;

 private:
  GridSpec grid_;
  double alpha_;
  std::vector<std::vector<double>> mu_;
  std::vector<double> mu_sq_;
  std::vector<double> frac_lap_;
  std::vector<double> delta_;
  std::vector<double> inv_delta_;
};

/// Throws ValidationError unless alpha is in (1, 2].
void validate_alpha(double alpha);

SymbolSet build_symbols(const GridSpec& grid, double alpha);

/// Sum over |mu k|^2 per flat bin; independent of alpha.
std::vector<double> squared_wavenumbers(const GridSpec& grid);

/// c_k = (1 / prod N_i) sum_p f_p e^{-i mu k (x_p - a)}.
Field forward_transform(const Field& f);
/// f_p = sum_k c_k e^{i mu k (x_p - a)}, unnormalized.
Field inverse_transform(const Field& c);

/// In-place transforms on raw sample buffers of the given shape.
void forward_transform_inplace(std::span<const std::size_t> shape, std::span<Complex> data);
void inverse_transform_inplace(std::span<const std::size_t> shape, std::span<Complex> data);

Field apply_symbol(const Field& c, std::span<const double> multiplier);
Field apply_symbol(const Field& c, std::span<const Complex> multiplier);
/// Multiplier given as a function of delta_k.
Field apply_symbol(const Field& c, const SymbolSet& symbols, const std::function<Complex(double)>& of_delta);

/// Spectral zero padding (finer target) or truncation to T_N (coarser target),
/// per dimension. The result is in the same space as the input.
Field resample(const Field& f, const GridSpec& target);

/// Coefficients of the complex conjugate of the physical field with coefficients c:
/// result_k = conj(c_{-k}).
Field conjugate_spectrum(const Field& c);

}  // namespace fsg
