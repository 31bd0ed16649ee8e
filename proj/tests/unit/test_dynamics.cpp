#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fsg/dynamics.hpp"
#include "fsg/error.hpp"
#include "fsg/nonlinearity.hpp"
#include "fsg/observables.hpp"
#include "fsg/scenarios.hpp"
#include "support/oracles.hpp"
#include "support/semi_discrete.hpp"

namespace fsg {
namespace {

using std::numbers::pi;

GridSpec square(std::size_t n) { return GridSpec::cube(2, {0.0, 2.0 * pi}, n); }

std::size_t flat_index(const GridSpec& g, long k0, long k1) {
  return bin_of_frequency(k0, g.points(0)) * g.stride(0) + bin_of_frequency(k1, g.points(1));
}

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double l2_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

ModelParams real_params(double alpha, double eps) {
  ModelParams p;
  p.alpha = alpha;
  p.epsilon = eps;
  return p;
}

TEST(EvalF, Examples) {
  EXPECT_EQ(eval_f(0.0, 0.3, 1e-2), 0.0);
  EXPECT_NEAR(eval_f(pi, 1.0, 1e-2), -pi, 1e-15);
  EXPECT_NEAR(eval_f(1.0, 0.1, 1e-2) / -1.66583353171847693186e-3, 1.0, 1e-12);
}

TEST(EvalF, BranchesAgreeAtThreshold) {
  const double thr = 1e-2;
  for (double eps : {1.0, 0.1, 1e-3}) {
    for (double sign : {1.0, -1.0}) {
      const double u = sign * thr / eps;
      const double direct = std::sin(eps * u) / eps - u;
      const double series = eval_f(u * (1.0 - 1e-15), eps, thr);
      EXPECT_NEAR(series / direct, 1.0, 1e-10) << "eps=" << eps;
      EXPECT_EQ(eval_f(u, eps, thr), direct);
    }
  }
  const std::complex<double> z(0.7e-2, 0.5e-2);
  const auto direct = std::sin(z) - z;
  const auto series = eval_f(z * 0.99, 1.0, 1e-2) / std::pow(0.99, 3);
  EXPECT_NEAR(std::abs(series / direct - 1.0), 0.0, 1e-3);
  EXPECT_NEAR(std::abs(eval_f(z, 1.0, 1e-2 + 1e-12) / direct - 1.0), 0.0, 1e-10);
}

TEST(EvalF, SmallEpsilonStaysAccurate) {
  // Leading behaviour -eps^2 u^3 / 6 for eps -> 0.
  const double eps = 1e-6, u = 2.0;
  EXPECT_NEAR(eval_f(u, eps, 1e-2) / (-eps * eps * u * u * u / 6.0), 1.0, 1e-12);
}

TEST(ModelParams, Validation) {
  ModelParams p;
  EXPECT_NO_THROW(p.validate());
  p.epsilon = 1.5;
  EXPECT_THROW(p.validate(), ValidationError);
  p.epsilon = 0.5;
  p.alpha = 1.0;
  EXPECT_THROW(p.validate(), ValidationError);
  p.alpha = 1.5;
  p.taylor_threshold = 0.2;
  EXPECT_THROW(p.validate(), ValidationError);
  p.taylor_threshold = 1e-2;
  p.variant = Variant::OscillatorySG;
  p.p = 0;
  EXPECT_THROW(p.validate(), ValidationError);
}

TEST(Phi0FromUv, Examples) {
  const auto g = square(8);
  const auto sym = build_symbols(g, 2.0);
  const Field u0 = oracle::smooth_random(g, 1);
  const Field zero(g, Space::Physical);

  EXPECT_LT(max_diff(phi0_from_uv(u0, zero, sym).values(), forward_transform(u0).values()), 1e-15);

  const Field cosx = Field::sample(g, [](auto x) { return Complex(std::cos(x[0])); });
  const Field phi = phi0_from_uv(zero, cosx, sym);
  const Complex expect(0.0, -1.0 / (2.0 * std::sqrt(2.0)));
  for (std::size_t j = 0; j < phi.size(); ++j) {
    const bool mode = j == flat_index(g, 1, 0) || j == flat_index(g, -1, 0);
    EXPECT_NEAR(std::abs(phi[j] - (mode ? expect : Complex(0.0))), 0.0, 1e-15);
  }

  const Field c = Field::sample(g, [](auto) { return Complex(0.75); });
  const Field phic = phi0_from_uv(c, c, sym);
  EXPECT_NEAR(std::abs(phic[0] - Complex(0.75, -0.75)), 0.0, 1e-15);
}

TEST(Phi0FromUv, RejectsGridMismatch) {
  const auto sym = build_symbols(square(8), 2.0);
  EXPECT_THROW(phi0_from_uv(Field(square(8), Space::Physical), Field(square(16), Space::Physical), sym),
               ValidationError);
}

TEST(ReconstructUv, Examples) {
  const auto g = square(8);
  const auto sym = std::make_shared<const SymbolSet>(g, 2.0);
  const Field zero(g, Space::Physical);
  const Field cosx = Field::sample(g, [](auto x) { return Complex(std::cos(x[0])); });

  const State s = make_state(real_params(2.0, 1.0), sym, zero, cosx);
  const auto uv = reconstruct_uv(s);
  EXPECT_LT(uv.u.max_abs(), 1e-15);
  EXPECT_LT(max_diff(uv.v.values(), cosx.values()), 1e-12);

  State realphi = make_state(real_params(2.0, 1.0), sym, cosx, zero);
  EXPECT_LT(reconstruct_uv(realphi).v.max_abs(), 1e-15);
}

TEST(ReconstructUv, RoundTripRandom) {
  const GridSpec g({{0.0, 1.0}, {0.0, 2.0 * pi}}, {16, 8});
  for (unsigned seed = 0; seed < 4; ++seed) {
    const Field u0 = oracle::smooth_random(g, seed);
    const Field u1 = oracle::smooth_random(g, seed + 100);
    const State s = make_state(real_params(1.4, 0.5), u0, u1);
    const auto uv = reconstruct_uv(s);
    EXPECT_LT(max_diff(uv.u.values(), u0.values()), 1e-12 * u0.max_abs());
    EXPECT_LT(max_diff(uv.v.values(), u1.values()), 1e-12 * u1.max_abs());
  }
}

TEST(StrangStep, LinearOnlyIsPurePhase) {
  const auto g = square(8);
  auto p = real_params(1.5, 1.0);
  p.linear_only = true;
  const State s0 = make_state(p, oracle::smooth_random(g, 2), oracle::smooth_random(g, 3));
  const double tau = 0.3;
  const State s1 = strang_step(s0, tau);
  EXPECT_DOUBLE_EQ(s1.time, tau);
  EXPECT_EQ(s1.step, 1u);
  const auto d = s0.symbols->delta();
  for (std::size_t j = 0; j < g.size(); ++j) {
    EXPECT_NEAR(std::abs(s1.phi[j] - std::polar(1.0, tau * d[j]) * s0.phi[j]), 0.0, 1e-15);
  }
}

TEST(StrangStep, LocalErrorIsThirdOrderAgainstRk4Oracle) {
  const auto g = square(8);
  const double alpha = 1.5, eps = 1.0;
  const Field u0 = oracle::smooth_random(g, 21, 0.8);
  const Field u1 = oracle::smooth_random(g, 22, 0.8);
  const State s0 = make_state(real_params(alpha, eps), u0, u1);
  const oracle::SemiDiscreteRealSG ode(g, alpha, eps);
  const std::vector<Complex> c0(s0.phi.values().begin(), s0.phi.values().end());

  std::vector<double> errors;
  for (double tau : {0.2, 0.1, 0.05}) {
    const State s1 = strang_step(s0, tau);
    const auto ref = ode.integrate(c0, tau, 1000);
    errors.push_back(l2_diff(s1.phi.values(), ref));
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i - 1] / errors[i];
    EXPECT_GE(ratio, 6.5) << "tau rung " << i;
    EXPECT_LE(ratio, 9.5) << "tau rung " << i;
  }
}

TEST(StrangStep, LinearFlowIsGridIndependentOnResolvedModes) {
  const auto g8 = square(8);
  const auto g16 = square(16);
  auto p = real_params(1.8, 1.0);
  p.linear_only = true;
  const Field u0 = oracle::smooth_random(g8, 5, 0.8, true, true);
  const Field u1 = oracle::smooth_random(g8, 6, 0.8, true, true);
  const State a = evolve(make_state(p, u0, u1), 0.1, 7);
  const State b = evolve(make_state(p, resample(u0, g16), resample(u1, g16)), 0.1, 7);
  const Field b_on_8 = resample(b.phi, g8);
  EXPECT_LT(max_diff(a.phi.values(), b_on_8.values()), 1e-14);
}

TEST(StrangStep, TimeReversalOfLinearFlow) {
  const auto g = square(16);
  auto p = real_params(1.3, 1.0);
  p.linear_only = true;
  const State s0 = make_state(p, oracle::smooth_random(g, 8), oracle::smooth_random(g, 9));
  const State back = strang_step(strang_step(s0, 0.37), -0.37);
  EXPECT_LT(max_diff(back.phi.values(), s0.phi.values()), 1e-12 * s0.phi.max_abs());
  EXPECT_THROW(strang_step(s0, 0.0), ValidationError);
}

TEST(Flows, LinearFlowPreservesSobolevNorms) {
  const auto g = square(32);
  State s = make_state(real_params(1.2, 0.5), oracle::smooth_random(g, 11), oracle::smooth_random(g, 12));
  const Field before = s.phi;
  apply_linear_flow(s, 2.3);
  for (double sv : {0.0, 0.6, 1.0, 3.0}) {
    EXPECT_NEAR(sobolev_norm(s.phi, sv) / sobolev_norm(before, sv), 1.0, 1e-12);
  }
}

TEST(Flows, NonlinearFlowOnlyChangesImaginaryPart) {
  const auto g = square(16);
  State s = make_state(real_params(1.7, 1.0), oracle::smooth_random(g, 13), oracle::smooth_random(g, 14));
  const Field before = inverse_transform(s.phi);
  apply_nonlinear_flow(s, 0.25);
  const Field after = inverse_transform(s.phi);
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    re = std::max(re, std::abs(after[j].real() - before[j].real()));
    im = std::max(im, std::abs(after[j].imag() - before[j].imag()));
  }
  EXPECT_LT(re, 1e-10);
  EXPECT_GT(im, 1e-3);
}

TEST(Evolve, ZeroStepsIsUnchanged) {
  const auto g = square(8);
  const State s0 = make_state(real_params(2.0, 1.0), oracle::smooth_random(g, 1), oracle::smooth_random(g, 2));
  int calls = 0;
  const Observer obs{1, [&](const State&) { ++calls; }};
  const State s = evolve(s0, 0.1, 0, std::span<const Observer>(&obs, 1));
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(s.time, 0.0);
  EXPECT_EQ(max_diff(s.phi.values(), s0.phi.values()), 0.0);
}

TEST(Evolve, LinearOnlyAccumulatesPhase) {
  const auto g = square(8);
  auto p = real_params(1.6, 1.0);
  p.linear_only = true;
  const State s0 = make_state(p, oracle::smooth_random(g, 3), oracle::smooth_random(g, 4));
  const std::size_t n = 25;
  const double tau = 0.04;
  const State s = evolve(s0, tau, n);
  const auto d = s0.symbols->delta();
  for (std::size_t j = 0; j < g.size(); ++j) {
    EXPECT_NEAR(std::abs(s.phi[j] - std::polar(1.0, static_cast<double>(n) * tau * d[j]) * s0.phi[j]), 0.0, 1e-13);
  }
}

TEST(Evolve, ObserversFireAtConfiguredSteps) {
  const auto g = square(8);
  const State s0 = make_state(real_params(2.0, 1.0), oracle::smooth_random(g, 1), oracle::smooth_random(g, 2));
  std::vector<std::size_t> seen;
  const Observer obs{4, [&](const State& s) { seen.push_back(s.step); }};
  evolve(s0, 0.01, 10, std::span<const Observer>(&obs, 1));
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 4, 8, 10}));
}

TEST(Evolve, BlowUpNamesStep) {
  const auto g = square(8);
  State s0 = make_state(real_params(2.0, 1.0), oracle::smooth_random(g, 1), oracle::smooth_random(g, 2));
  s0.phi[3] = Complex(std::numeric_limits<double>::infinity(), 0.0);
  try {
    evolve(s0, 0.01, 5);
    FAIL() << "expected BlowUpError";
  } catch (const BlowUpError& e) {
    EXPECT_EQ(e.step(), 1u);
  }
}

TEST(Evolve, Deterministic) {
  const auto sc = make_scenario(ScenarioName::Smooth2D, std::vector<std::size_t>{16});
  const State s0 = make_state(real_params(1.5, 0.5), sc.u0, sc.u1);
  const State a = evolve(s0, 0.05, 40);
  const State b = evolve(s0, 0.05, 40);
  EXPECT_EQ(max_diff(a.phi.values(), b.phi.values()), 0.0);
}

TEST(Evolve, SecondOrderSelfConvergence) {
  // tau and tau/2 against a tau/64 reference at fixed T.
  const auto sc = make_scenario(ScenarioName::Smooth2D, std::vector<std::size_t>{16});
  const auto p = real_params(2.0, 0.5);
  const State s0 = make_state(p, sc.u0, sc.u1);
  const double T = 1.0, tau = 0.05;
  auto run = [&](double t) { return reconstruct_uv(evolve(s0, t, static_cast<std::size_t>(std::lround(T / t)))).u; };
  const Field ref = run(tau / 64);
  const double e1 = error_norm(run(tau), ref, 1.0);
  const double e2 = error_norm(run(tau / 2), ref, 1.0);
  const double order = std::log2(e1 / e2);
  EXPECT_NEAR(order, 2.0, 0.2);
}

TEST(ComplexVariant, RealDataMatchesRealVariant) {
  const auto sc = make_scenario(ScenarioName::Smooth2D, std::vector<std::size_t>{16});
  auto pr = real_params(1.5, 1.0);
  auto pc = pr;
  pc.variant = Variant::ComplexSG;
  State r = make_state(pr, sc.u0, sc.u1);
  State c = make_state(pc, sc.u0, sc.u1);
  for (int n = 0; n < 30; ++n) {
    strang_step_inplace(r, 0.05);
    strang_step_inplace(c, 0.05);
    const Field conj_plus = conjugate_spectrum(c.phi);
    EXPECT_LT(max_diff(c.phi_minus->values(), conj_plus.values()), 1e-10);
  }
  const auto ur = reconstruct_uv(r);
  const auto uc = reconstruct_uv(c);
  EXPECT_LT(max_diff(ur.u.values(), uc.u.values()), 1e-10);
  EXPECT_LT(max_diff(ur.v.values(), uc.v.values()), 1e-10);
  EXPECT_LT(uc.u.max_abs_imag(), 1e-10);
}

TEST(ComplexVariant, RealVariantRejectsComplexData) {
  const auto sc = make_scenario(ScenarioName::OscComplex2D, std::vector<std::size_t>{8});
  EXPECT_THROW(make_state(real_params(2.0, 1.0), sc.u0, sc.u1), ValidationError);
}

TEST(ComplexVariant, ConjugateCouplingHookChangesComplexTrajectory) {
  const auto sc = make_scenario(ScenarioName::OscComplex2D, std::vector<std::size_t>{8});
  ModelParams p = real_params(2.0, 0.5);
  p.variant = Variant::ComplexSG;
  auto q = p;
  q.conjugate_coupling = true;
  const State a = evolve(make_state(p, sc.u0, sc.u1), 0.01, 5);
  const State b = evolve(make_state(q, sc.u0, sc.u1), 0.01, 5);
  EXPECT_GT(max_diff(a.phi.values(), b.phi.values()), 1e-6);
}

TEST(OscillatoryWrap, ClockMapping) {
  ModelParams p = real_params(2.0, 1.0);
  p.variant = Variant::OscillatorySG;
  p.p = 1;
  auto w = oscillatory_wrap(p, 0.05);
  EXPECT_EQ(w.tau, 0.05);
  EXPECT_EQ(w.native.variant, Variant::ComplexSG);
  EXPECT_EQ(w.clock.native_time(1.0), 1.0);

  p.epsilon = 0.5;
  w = oscillatory_wrap(p, 0.01);
  EXPECT_DOUBLE_EQ(w.tau, 0.04);
  EXPECT_DOUBLE_EQ(w.clock.native_time(1.0), 4.0);

  p.p = 2;
  EXPECT_DOUBLE_EQ(oscillatory_wrap(p, 0.01).tau, 0.16);

  EXPECT_THROW(oscillatory_wrap(p, 1.0), ValidationError);
  EXPECT_THROW(oscillatory_wrap(p, 0.0), ValidationError);
}

}  // namespace
}  // namespace fsg
