#include "fsg/observables.hpp"

#include <algorithm>
#include <cmath>

#include "fsg/error.hpp"
#include "fsg/nonlinearity.hpp"

namespace fsg {

double sobolev_norm(const Field& f, double s) {
  const Field c = f.space() == Space::Physical ? forward_transform(f) : f;
  const auto mu_sq = squared_wavenumbers(c.grid());
  const auto v = c.values();
  double sum = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double w = s == 0.0 ? 1.0 : std::pow(1.0 + mu_sq[j], s);
    sum += w * std::norm(v[j]);
  }
  return std::sqrt(sum);
}

double error_norm(const Field& num, const Field& ref, double s) {
  if (!num.grid().same_domain(ref.grid())) throw ValidationError("error_norm: fields live on different domains");
  const Field a = num.space() == Space::Physical ? forward_transform(num) : num;
  const Field b = ref.space() == Space::Physical ? forward_transform(ref) : ref;
  if (a.grid() == b.grid()) return sobolev_norm(a - b, s);
  std::vector<std::size_t> n(static_cast<std::size_t>(a.grid().dim()));
  for (int i = 0; i < a.grid().dim(); ++i) n[i] = std::max(a.grid().points(i), b.grid().points(i));
  const GridSpec fine = a.grid().with_points(n);
  return sobolev_norm(resample(a, fine) - resample(b, fine), s);
}

double discrete_energy(const Field& u, const Field& v, const SymbolSet& symbols, double epsilon, double threshold) {
  require_space(u, Space::Physical, "discrete_energy");
  require_space(v, Space::Physical, "discrete_energy");
  if (!(u.grid() == symbols.grid()) || !(v.grid() == symbols.grid())) {
    throw ValidationError("discrete_energy: fields and symbols must share one grid");
  }
  const auto root = symbols.frac_lap_power(0.5);
  const Field grad = inverse_transform(apply_symbol(forward_transform(u), std::span<const double>(root)));
  double sum = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    sum += std::norm(v[j]) + std::norm(grad[j]) + potential_density(u[j].real(), epsilon, threshold);
  }
  return u.grid().cell_volume() * sum;
}

double state_energy(const State& s) {
  const auto uv = reconstruct_uv(s);
  return discrete_energy(uv.u, uv.v, *s.symbols, s.params.epsilon, s.params.taylor_threshold);
}

void EnergyTracker::record(const State& s) {
  const double e = state_energy(s);
  const double drift = samples_.empty() ? 0.0 : e - samples_.front().value;
  samples_.push_back({s.step, s.time, e, drift});
}

double EnergyTracker::max_abs_drift() const {
  double m = 0.0;
  for (const auto& e : samples_) m = std::max(m, std::abs(e.drift));
  return m;
}

namespace {

Field twisted(const Field& phi, const SymbolSet& symbols, double t) {
  const auto ph = symbols.phase(-t);
  return apply_symbol(phi, std::span<const Complex>(ph));
}

}  // namespace

double twisted_increment(const State& before, const State& after, double s) {
  if (!(before.grid() == after.grid())) throw ValidationError("twisted_increment: states on different grids");
  if (!(after.time > before.time)) throw ValidationError("twisted_increment: after.time must exceed before.time");
  if (before.phi_minus.has_value() != after.phi_minus.has_value()) {
    throw ValidationError("twisted_increment: states of different variants");
  }
  const auto& sym = *after.symbols;
  const double plus = sobolev_norm(twisted(after.phi, sym, after.time) - twisted(before.phi, sym, before.time), s);
  if (!after.phi_minus) return plus;
  const double minus =
      sobolev_norm(twisted(*after.phi_minus, sym, -after.time) - twisted(*before.phi_minus, sym, -before.time), s);
  return std::hypot(plus, minus);
}

}  // namespace fsg
