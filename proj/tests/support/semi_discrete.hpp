#pragma once

// Brute-force integrator for the semi-discrete system the splitting scheme
// approximates, written against direct DFT matrices and classical RK4:
//   d/dt c_k = i delta_k c_k + i / delta_k * DFT[ f(Re IDFT c) ]_k.

#include <cmath>
#include <complex>
#include <vector>

#include "support/oracles.hpp"

namespace fsg::oracle {

class SemiDiscreteRealSG {
 public:
  SemiDiscreteRealSG(const GridSpec& g, double alpha, double epsilon) : n_(g.size()), epsilon_(epsilon) {
    const auto ks = frequencies(g);
    const auto xs = nodes(g);
    fwd_.resize(n_ * n_);
    inv_.resize(n_ * n_);
    delta_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      delta_[a] = delta(g, ks[a], alpha);
      for (std::size_t p = 0; p < n_; ++p) {
        double phase = 0.0;
        for (int i = 0; i < g.dim(); ++i) {
          phase += 2.0 * std::numbers::pi * static_cast<double>(ks[a][i]) / g.interval(i).length() *
                   (xs[p][i] - g.interval(i).lo);
        }
        fwd_[a * n_ + p] = std::polar(1.0, -phase) / static_cast<double>(n_);
        inv_[p * n_ + a] = std::polar(1.0, phase);
      }
    }
  }

  std::vector<C> rhs(const std::vector<C>& c) const {
    std::vector<C> f(n_);
    for (std::size_t p = 0; p < n_; ++p) {
      C s{};
      for (std::size_t a = 0; a < n_; ++a) s += inv_[p * n_ + a] * c[a];
      const double u = s.real();
      f[p] = std::sin(epsilon_ * u) / epsilon_ - u;
    }
    std::vector<C> out(n_);
    const C i{0.0, 1.0};
    for (std::size_t a = 0; a < n_; ++a) {
      C s{};
      for (std::size_t p = 0; p < n_; ++p) s += fwd_[a * n_ + p] * f[p];
      out[a] = i * delta_[a] * c[a] + i / delta_[a] * s;
    }
    return out;
  }

  std::vector<C> integrate(std::vector<C> c, double t, std::size_t steps) const {
    const double h = t / static_cast<double>(steps);
    auto axpy = [](const std::vector<C>& x, double a, const std::vector<C>& y) {
      std::vector<C> r(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) r[j] = x[j] + a * y[j];
      return r;
    };
    for (std::size_t s = 0; s < steps; ++s) {
      const auto k1 = rhs(c);
      const auto k2 = rhs(axpy(c, h / 2, k1));
      const auto k3 = rhs(axpy(c, h / 2, k2));
      const auto k4 = rhs(axpy(c, h, k3));
      for (std::size_t j = 0; j < n_; ++j) c[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    return c;
  }

 private:
  std::size_t n_;
  double epsilon_;
  std::vector<C> fwd_;
  std::vector<C> inv_;
  std::vector<double> delta_;
};

}  // namespace fsg::oracle
