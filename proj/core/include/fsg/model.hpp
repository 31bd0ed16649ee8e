#pragma once

#include <string>
#include <string_view>

namespace fsg {

enum class Variant {
  RealSG,         ///< real-valued u, single phi
  ComplexSG,      ///< complex-valued u, coupled phi_+ / phi_-
  OscillatorySG,  ///< ComplexSG run on the rescaled clock s = eps^(2p) t
};

std::string_view to_string(Variant v);
/// Accepts "real", "complex", "oscillatory"; throws ValidationError otherwise.
Variant parse_variant(std::string_view name);

struct ModelParams {
  double alpha = 2.0;
  double epsilon = 1.0;
  Variant variant = Variant::RealSG;
  /// Clock exponent of the oscillatory variant.
  int p = 1;
  /// Below this value of eps*|u| the nonlinearity switches to its Taylor series.
  double taylor_threshold = 1e-2;

  /// Test hook: drop the nonlinear substep (f == 0).
  bool linear_only = false;
  /// Test hook for the complex variants: couple through (phi_+ + conj(phi_-))/2
  /// instead of (phi_+ + phi_-)/2.
  bool conjugate_coupling = false;

  bool is_complex() const { return variant != Variant::RealSG; }

  /// Throws ValidationError on any out-of-range field.
  void validate() const;
};

}  // namespace fsg
