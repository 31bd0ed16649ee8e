#pragma once

#include <cstddef>
#include <vector>

#include "fsg/dynamics.hpp"
#include "fsg/field.hpp"
#include "fsg/spectral.hpp"

namespace fsg {

/// ||f||_s^2 = sum_k (1 + |mu k|^2)^s |c_k|^2 over the normalized coefficients c.
/// Physical fields are transformed first.
double sobolev_norm(const Field& f, double s);

/// sobolev_norm(num - ref, s) after spectrally resampling both fields onto the
/// per-dimension finer grid. Throws ValidationError on interval mismatch.
double error_norm(const Field& num, const Field& ref, double s);

/// E = prod(h) sum_p [ |v_p|^2 + |((-Laplacian)^(alpha/4) u)_p|^2 + (2/eps^2)(1 - cos(eps u_p)) ].
double discrete_energy(const Field& u, const Field& v, const SymbolSet& symbols, double epsilon,
                       double threshold = 1e-2);

/// discrete_energy of reconstruct_uv(s), using the state's own model parameters.
double state_energy(const State& s);

struct EnergySample {
  std::size_t step = 0;
  double time = 0.0;
  double value = 0.0;
  double drift = 0.0;  ///< value - value at the first sample
};

/// Collects EnergySample records; use as an evolve() observer.
class EnergyTracker {
 public:
  void record(const State& s);
  const std::vector<EnergySample>& samples() const { return samples_; }
  double max_abs_drift() const;

 private:
  std::vector<EnergySample> samples_;
};

/// || e^{-i t1 <grad>} phi(t1) - e^{-i t0 <grad>} phi(t0) ||_s, the increment of
/// the twisted variable between two states of one trajectory. Complex variants
/// combine the phi_+ and phi_- increments in root-sum-square (phi_- twists with
/// the opposite sign). Throws ValidationError unless after.time > before.time.
double twisted_increment(const State& before, const State& after, double s);

}  // namespace fsg
