#include "fsg/dynamics.hpp"

#include <cmath>
#include <string>

#include "fsg/error.hpp"
#include "fsg/nonlinearity.hpp"

namespace fsg {

namespace {

constexpr Complex kI{0.0, 1.0};

struct HalfPhaseCache {
  std::shared_ptr<const SymbolSet> symbols;
  double tau = 0.0;
  std::vector<Complex> table;
};

/// e^{i tau delta / 2}, memoized per thread for the last (symbols, tau) pair.
const std::vector<Complex>& half_phase(const State& s, double tau) {
  thread_local HalfPhaseCache cache;
  if (cache.symbols != s.symbols || cache.tau != tau) {
    cache.table = s.symbols->phase(0.5 * tau);
    cache.symbols = s.symbols;
    cache.tau = tau;
  }
  return cache.table;
}

void multiply(std::span<Complex> v, const std::vector<Complex>& m) {
  for (std::size_t j = 0; j < v.size(); ++j) v[j] *= m[j];
}

void multiply_conj(std::span<Complex> v, const std::vector<Complex>& m) {
  for (std::size_t j = 0; j < v.size(); ++j) v[j] *= std::conj(m[j]);
}

void linear_half(State& s, const std::vector<Complex>& half) {
  multiply(s.phi.values(), half);
  if (s.phi_minus) multiply_conj(s.phi_minus->values(), half);
}

void nonlinear_real(State& s, double tau) {
  const auto& p = s.params;
  const auto shape = s.grid().shape();
  std::vector<Complex> work(s.phi.values().begin(), s.phi.values().end());
  inverse_transform_inplace(shape, work);
  for (auto& z : work) z = Complex(eval_f(z.real(), p.epsilon, p.taylor_threshold), 0.0);
  forward_transform_inplace(shape, work);
  const auto inv_delta = s.symbols->inverse_delta();
  auto phi = s.phi.values();
  for (std::size_t j = 0; j < phi.size(); ++j) phi[j] += tau * kI * inv_delta[j] * work[j];
}

void nonlinear_complex(State& s, double tau) {
  const auto& p = s.params;
  const auto shape = s.grid().shape();
  const Field minus = p.conjugate_coupling ? conjugate_spectrum(*s.phi_minus) : *s.phi_minus;
  auto plus = s.phi.values();
  auto mv = minus.values();
  std::vector<Complex> work(plus.size());
  for (std::size_t j = 0; j < work.size(); ++j) work[j] = 0.5 * (plus[j] + mv[j]);
  inverse_transform_inplace(shape, work);
  for (auto& z : work) z = eval_f(z, p.epsilon, p.taylor_threshold);
  forward_transform_inplace(shape, work);
  const auto inv_delta = s.symbols->inverse_delta();
  auto pm = s.phi_minus->values();
  for (std::size_t j = 0; j < plus.size(); ++j) {
    const Complex g = tau * kI * inv_delta[j] * work[j];
    plus[j] += g;
    pm[j] -= g;
  }
}

bool state_finite(const State& s) { return s.phi.all_finite() && (!s.phi_minus || s.phi_minus->all_finite()); }

}  // namespace

void apply_linear_flow(State& s, double t) {
  require_space(s.phi, Space::Spectral, "apply_linear_flow");
  linear_half(s, s.symbols->phase(t));
}

void apply_nonlinear_flow(State& s, double t) {
  require_space(s.phi, Space::Spectral, "apply_nonlinear_flow");
  if (s.params.is_complex()) {
    nonlinear_complex(s, t);
  } else {
    nonlinear_real(s, t);
  }
}

Field phi0_from_uv(const Field& u0, const Field& u1, const SymbolSet& symbols, int sign) {
  require_space(u0, Space::Physical, "phi0_from_uv");
  require_space(u1, Space::Physical, "phi0_from_uv");
  if (!(u0.grid() == u1.grid()) || !(u0.grid() == symbols.grid())) {
    throw ValidationError("phi0_from_uv: u0, u1 and symbols must share one grid");
  }
  Field phi = forward_transform(u0);
  const Field v = forward_transform(u1);
  const auto inv_delta = symbols.inverse_delta();
  auto out = phi.values();
  const Complex factor = -static_cast<double>(sign) * kI;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += factor * inv_delta[j] * v[j];
  return phi;
}

State make_state(const ModelParams& params, const Field& u0, const Field& u1) {
  return make_state(params, std::make_shared<const SymbolSet>(u0.grid(), params.alpha), u0, u1);
}

State make_state(const ModelParams& params, std::shared_ptr<const SymbolSet> symbols, const Field& u0,
                 const Field& u1) {
  params.validate();
  if (symbols->alpha() != params.alpha) throw ValidationError("make_state: symbol set alpha differs from params");
  if (!params.is_complex() && (!u0.is_real() || !u1.is_real())) {
    throw ValidationError("make_state: the real variant needs real-valued initial data");
  }
  State s;
  s.params = params;
  s.phi = phi0_from_uv(u0, u1, *symbols, +1);
  if (params.is_complex()) s.phi_minus = phi0_from_uv(u0, u1, *symbols, -1);
  s.symbols = std::move(symbols);
  return s;
}

void strang_step_inplace(State& s, double tau) {
  if (!std::isfinite(tau) || tau == 0.0) throw ValidationError("strang_step: tau must be finite and nonzero");
  require_space(s.phi, Space::Spectral, "strang_step");
  const auto& half = half_phase(s, tau);
  linear_half(s, half);
  if (!s.params.linear_only) {
    if (s.params.is_complex()) {
      nonlinear_complex(s, tau);
    } else {
      nonlinear_real(s, tau);
    }
  }
  linear_half(s, half);
  s.time += tau;
  ++s.step;
}

State strang_step(State s, double tau) {
  strang_step_inplace(s, tau);
  return s;
}

State evolve(State s, double tau, std::size_t steps, std::span<const Observer> observers) {
  auto notify = [&](std::size_t local) {
    for (const auto& o : observers) {
      const std::size_t every = o.every == 0 ? 1 : o.every;
      if (local % every == 0 || local == steps) o.callback(s);
    }
  };
  notify(0);
  for (std::size_t n = 1; n <= steps; ++n) {
    strang_step_inplace(s, tau);
    if (!state_finite(s)) {
      throw BlowUpError(s.step, s.time,
                        "non-finite coefficient at step " + std::to_string(s.step) + " (t=" + std::to_string(s.time) + ")");
    }
    notify(n);
  }
  return s;
}

PhysicalPair reconstruct_uv(const State& s) {
  const auto delta = s.symbols->delta();
  const Field& plus = s.phi;
  const Field minus = s.phi_minus ? *s.phi_minus : conjugate_spectrum(s.phi);
  Field u(s.grid(), Space::Spectral);
  Field v(s.grid(), Space::Spectral);
  auto uv = u.values();
  auto vv = v.values();
  for (std::size_t j = 0; j < uv.size(); ++j) {
    uv[j] = 0.5 * (plus[j] + minus[j]);
    vv[j] = 0.5 * kI * delta[j] * (plus[j] - minus[j]);
  }
  PhysicalPair out{inverse_transform(u), inverse_transform(v)};
  if (!s.params.is_complex()) {
    for (Field* f : {&out.u, &out.v}) {
      if (!f->is_real(1e-10)) throw std::logic_error("reconstruct_uv: real variant produced a complex field");
      for (auto& z : f->values()) z = Complex(z.real(), 0.0);
    }
  }
  return out;
}

double OscillatoryClock::scale() const { return std::pow(epsilon, 2 * p); }

WrappedRun oscillatory_wrap(const ModelParams& params, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw ValidationError("oscillatory_wrap: lambda must be in (0,1)");
  params.validate();
  WrappedRun run;
  run.clock = OscillatoryClock{params.epsilon, params.p};
  run.native = params;
  run.native.variant = Variant::ComplexSG;
  run.tau = run.clock.native_step(lambda);
  return run;
}

}  // namespace fsg
