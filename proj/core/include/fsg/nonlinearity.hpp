#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace fsg {

/// f(u) = sin(eps u)/eps - u, the nonlinearity left after splitting the linear
/// part off (1/eps) sin(eps u). For eps|u| < threshold the three-term series
/// -eps^2 u^3/6 + eps^4 u^5/120 - eps^6 u^7/5040 replaces the cancelling
/// direct form.
template <typename T>
T eval_f(T u, double epsilon, double threshold) {
  using std::abs;
  using std::sin;
  if (epsilon * abs(u) >= threshold) return sin(epsilon * u) / epsilon - u;
  const T e2u2 = epsilon * epsilon * u * u;
  return -u * e2u2 * (1.0 / 6.0 - e2u2 * (1.0 / 120.0 - e2u2 * (1.0 / 5040.0)));
}

/// Pointwise eval_f over a sample array.
std::vector<double> eval_f(std::span<const double> u, double epsilon, double threshold);
std::vector<std::complex<double>> eval_f(std::span<const std::complex<double>> u, double epsilon, double threshold);

/// Potential density (2/eps^2)(1 - cos(eps u)), with the series
/// u^2 - eps^2 u^4/12 + eps^4 u^6/360 - eps^6 u^8/20160 below the threshold.
inline double potential_density(double u, double epsilon, double threshold) {
  const double x = epsilon * u;
  if (std::abs(x) >= threshold) return 2.0 * (1.0 - std::cos(x)) / (epsilon * epsilon);
  const double x2 = x * x;
  return u * u * (1.0 - x2 * (1.0 / 12.0 - x2 * (1.0 / 360.0 - x2 * (1.0 / 20160.0))));
}

}  // namespace fsg
