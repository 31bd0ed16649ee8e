#include "fsg/spectral.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "fsg/error.hpp"

namespace fsg {

void validate_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw ValidationError("alpha must be in (1,2], got " + std::to_string(alpha));
  }
}

std::vector<double> squared_wavenumbers(const GridSpec& grid) {
  const int d = grid.dim();
  std::vector<std::vector<double>> mu(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto n = grid.points(i);
    const double scale = 2.0 * std::numbers::pi / grid.interval(i).length();
    mu[i].resize(n);
    for (std::size_t b = 0; b < n; ++b) mu[i][b] = scale * static_cast<double>(frequency_of_bin(b, n));
  }
  std::vector<double> out(grid.size());
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += mu[i][idx[i]] * mu[i][idx[i]];
    out[flat] = s;
    for (int i = d - 1; i >= 0; --i) {
      if (++idx[i] < grid.points(i)) break;
      idx[i] = 0;
    }
  }
  return out;
}

SymbolSet::SymbolSet(GridSpec grid, double alpha) : grid_(std::move(grid)), alpha_(alpha) {
  validate_alpha(alpha);
  const int d = grid_.dim();
  mu_.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto n = grid_.points(i);
    const double scale = 2.0 * std::numbers::pi / grid_.interval(i).length();
    mu_[i].resize(n);
    for (std::size_t b = 0; b < n; ++b) mu_[i][b] = scale * static_cast<double>(frequency_of_bin(b, n));
  }
  mu_sq_ = squared_wavenumbers(grid_);
  const auto size = grid_.size();
  frac_lap_.resize(size);
  delta_.resize(size);
  inv_delta_.resize(size);
  for (std::size_t j = 0; j < size; ++j) {
    // Zero mode must give exactly 0 and 1, independent of pow's edge behaviour.
    frac_lap_[j] = mu_sq_[j] == 0.0 ? 0.0 : std::pow(mu_sq_[j], 0.5 * alpha_);
    delta_[j] = std::sqrt(1.0 + frac_lap_[j]);
    inv_delta_[j] = 1.0 / delta_[j];
  }
}

std::vector<Complex> SymbolSet::phase(double t) const {
  std::vector<Complex> out(delta_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::polar(1.0, t * delta_[j]);
  return out;
}

std::vector<double> SymbolSet::frac_lap_power(double power) const {
  std::vector<double> out(frac_lap_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = frac_lap_[j] == 0.0 ? 0.0 : std::pow(frac_lap_[j], power);
  return out;
}

std::vector<double> SymbolSet::sobolev_multiplier(double s) const {
  std::vector<double> out(mu_sq_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::pow(1.0 + mu_sq_[j], 0.5 * s);
  return out;
}

SymbolSet build_symbols(const GridSpec& grid, double alpha) { return SymbolSet(grid, alpha); }

void forward_transform_inplace(std::span<const std::size_t> shape, std::span<Complex> data) {
  detail::plans_for(shape)->forward(data);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& z : data) z *= scale;
}

void inverse_transform_inplace(std::span<const std::size_t> shape, std::span<Complex> data) {
  detail::plans_for(shape)->backward(data);
}

Field forward_transform(const Field& f) {
  require_space(f, Space::Physical, "forward_transform");
  std::vector<Complex> v(f.values().begin(), f.values().end());
  forward_transform_inplace(f.grid().shape(), v);
  return Field(f.grid(), Space::Spectral, std::move(v));
}

Field inverse_transform(const Field& c) {
  require_space(c, Space::Spectral, "inverse_transform");
  std::vector<Complex> v(c.values().begin(), c.values().end());
  inverse_transform_inplace(c.grid().shape(), v);
  return Field(c.grid(), Space::Physical, std::move(v));
}

namespace {

template <typename T>
Field apply_multiplier(const Field& c, std::span<const T> multiplier) {
  require_space(c, Space::Spectral, "apply_symbol");
  if (multiplier.size() != c.size()) throw ValidationError("apply_symbol: multiplier length does not match grid");
  Field out = c;
  auto v = out.values();
  for (std::size_t j = 0; j < v.size(); ++j) v[j] *= multiplier[j];
  return out;
}

}  // namespace

Field apply_symbol(const Field& c, std::span<const double> multiplier) { return apply_multiplier(c, multiplier); }

Field apply_symbol(const Field& c, std::span<const Complex> multiplier) { return apply_multiplier(c, multiplier); }

Field apply_symbol(const Field& c, const SymbolSet& symbols, const std::function<Complex(double)>& of_delta) {
  if (!(c.grid() == symbols.grid())) throw ValidationError("apply_symbol: symbol set built for a different grid");
  std::vector<Complex> m(symbols.delta().size());
  for (std::size_t j = 0; j < m.size(); ++j) m[j] = of_delta(symbols.delta()[j]);
  return apply_multiplier<Complex>(c, m);
}

Field resample(const Field& f, const GridSpec& target) {
  if (!f.grid().same_domain(target)) throw ValidationError("resample: source and target intervals differ");
  if (f.grid() == target) return f;
  const bool physical = f.space() == Space::Physical;
  const Field src = physical ? forward_transform(f) : f;

  const auto& sg = src.grid();
  const int d = sg.dim();
  Field dst(target, Space::Spectral);
  auto out = dst.values();
  auto in = src.values();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  for (std::size_t flat = 0; flat < src.size(); ++flat) {
    bool kept = true;
    std::size_t to = 0;
    for (int i = 0; i < d; ++i) {
      const long k = frequency_of_bin(idx[i], sg.points(i));
      const auto nt = static_cast<long>(target.points(i));
      if (k < -nt / 2 || k >= nt / 2) {
        kept = false;
        break;
      }
      to += bin_of_frequency(k, target.points(i)) * target.stride(i);
    }
    if (kept) out[to] = in[flat];
    for (int i = d - 1; i >= 0; --i) {
      if (++idx[i] < sg.points(i)) break;
      idx[i] = 0;
    }
  }
  return physical ? inverse_transform(dst) : dst;
}

Field conjugate_spectrum(const Field& c) {
  require_space(c, Space::Spectral, "conjugate_spectrum");
  const auto& g = c.grid();
  const int d = g.dim();
  Field out(g, Space::Spectral);
  auto in = c.values();
  auto dst = out.values();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    std::size_t neg = 0;
    for (int i = 0; i < d; ++i) neg += negated_bin(idx[i], g.points(i)) * g.stride(i);
    dst[flat] = std::conj(in[neg]);
    for (int i = d - 1; i >= 0; --i) {
      if (++idx[i] < g.points(i)) break;
      idx[i] = 0;
    }
  }
  return out;
}

}  // namespace fsg
