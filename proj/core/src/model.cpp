#include <cmath>
#include <string>

#include "fsg/error.hpp"
#include "fsg/model.hpp"
#include "fsg/nonlinearity.hpp"
#include "fsg/spectral.hpp"

namespace fsg {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::RealSG: return "real";
    case Variant::ComplexSG: return "complex";
    case Variant::OscillatorySG: return "oscillatory";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  if (name == "real") return Variant::RealSG;
  if (name == "complex") return Variant::ComplexSG;
  if (name == "oscillatory") return Variant::OscillatorySG;
  throw ValidationError("unknown variant '" + std::string(name) + "' (expected real, complex or oscillatory)");
}

void ModelParams::validate() const {
  validate_alpha(alpha);
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ValidationError("epsilon must be in (0,1]");
  if (!(taylor_threshold > 0.0 && taylor_threshold < 0.1)) throw ValidationError("taylor threshold must be in (0,0.1)");
  if (variant == Variant::OscillatorySG && p < 1) throw ValidationError("oscillatory exponent p must be >= 1");
}

std::vector<double> eval_f(std::span<const double> u, double epsilon, double threshold) {
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = eval_f(u[i], epsilon, threshold);
  return out;
}

std::vector<std::complex<double>> eval_f(std::span<const std::complex<double>> u, double epsilon, double threshold) {
  std::vector<std::complex<double>> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = eval_f(u[i], epsilon, threshold);
  return out;
}

}  // namespace fsg
