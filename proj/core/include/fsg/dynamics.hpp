#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fsg/field.hpp"
#include "fsg/model.hpp"
#include "fsg/spectral.hpp"

namespace fsg {

/// Solver state. phi holds phi (RealSG) or phi_+ (complex variants); phi_minus
/// is engaged only for the complex variants. Both are kept in spectral space
/// between steps. time runs on the native clock t.
struct State {
  ModelParams params;
  std::shared_ptr<const SymbolSet> symbols;
  double time = 0.0;
  std::size_t step = 0;
  Field phi;
  std::optional<Field> phi_minus;

  const GridSpec& grid() const { return symbols->grid(); }
};

/// Spectral coefficients of u0 - i <grad>^{-1} u1 (sign = +1) or
/// u0 + i <grad>^{-1} u1 (sign = -1).
Field phi0_from_uv(const Field& u0, const Field& u1, const SymbolSet& symbols, int sign = +1);

/// Builds the initial state. RealSG requires real-valued u0, u1.
State make_state(const ModelParams& params, const Field& u0, const Field& u1);
State make_state(const ModelParams& params, std::shared_ptr<const SymbolSet> symbols, const Field& u0,
                 const Field& u1);

/// Exact linear flow phi_+- -> e^{+-i t <grad>} phi_+-; time is not advanced.
void apply_linear_flow(State& s, double t);
/// Exact nonlinear flow phi_+- -> phi_+- +- t i <grad>^{-1} f(u) with u held at its
/// current value (the flow leaves u invariant); time is not advanced.
void apply_nonlinear_flow(State& s, double t);

/// One Strang step: half linear phase flow, exact nonlinear flow
/// phi -> phi + tau F(phi), half linear phase flow. A negative tau runs the
/// scheme backwards.
void strang_step_inplace(State& s, double tau);
State strang_step(State s, double tau);

struct Observer {
  /// Invoked at step 0, at every multiple of `every`, and at the final step.
  std::size_t every = 1;
  std::function<void(const State&)> callback;
};

/// Applies `steps` Strang steps. Throws BlowUpError naming the step index if a
/// coefficient becomes non-finite.
State evolve(State s, double tau, std::size_t steps, std::span<const Observer> observers = {});

struct PhysicalPair {
  Field u;
  Field v;
};

/// u = (phi + conj phi)/2, v = (i/2) <grad> (phi - conj phi) for RealSG;
/// u = (phi_+ + phi_-)/2, v = (i/2) <grad> (phi_+ - phi_-) for the complex variants.
/// Physical-space output; RealSG output is checked to be real to 1e-10.
PhysicalPair reconstruct_uv(const State& s);

/// Clock mapping of the oscillatory variant: s = eps^(2p) t and lambda = eps^(2p) tau.
struct OscillatoryClock {
  double epsilon = 1.0;
  int p = 1;

  double scale() const;
  double native_step(double lambda) const { return lambda / scale(); }
  double native_time(double s_time) const { return s_time / scale(); }
};

struct WrappedRun {
  ModelParams native;  ///< ComplexSG parameters on the native clock
  OscillatoryClock clock;
  double tau = 0.0;    ///< native step
};

/// Maps an OscillatorySG problem with s-clock step lambda to the equivalent
/// native-clock ComplexSG run. The native initial velocity is u1 itself, since
/// d_s omega(0) = u1 / eps^(2p). Rejects lambda outside (0, 1).
WrappedRun oscillatory_wrap(const ModelParams& params, double lambda);

}  // namespace fsg
