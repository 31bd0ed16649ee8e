#include <benchmark/benchmark.h>

#include "fsg/dynamics.hpp"
#include "fsg/observables.hpp"
#include "fsg/scenarios.hpp"
#include "fsg/spectral.hpp"

namespace {

using namespace fsg;

void BM_ForwardInverse2D(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Field f = make_scenario(ScenarioName::Smooth2D, std::vector<std::size_t>{n}).u0;
  for (auto _ : st) benchmark::DoNotOptimize(inverse_transform(forward_transform(f)));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_ForwardInverse2D)->Arg(64)->Arg(128)->Arg(256);

void BM_StrangStep(benchmark::State& st, ScenarioName name, Variant variant) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto sc = make_scenario(name, std::vector<std::size_t>{n});
  ModelParams p;
  p.variant = variant;
  p.epsilon = 0.5;
  State s = make_state(p, sc.u0, sc.u1);
  for (auto _ : st) strang_step_inplace(s, 1e-3);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(sc.u0.size()));
}
BENCHMARK_CAPTURE(BM_StrangStep, real2d, ScenarioName::Smooth2D, Variant::RealSG)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_StrangStep, complex2d, ScenarioName::OscComplex2D, Variant::ComplexSG)->Arg(64)->Arg(128);
BENCHMARK_CAPTURE(BM_StrangStep, real3d, ScenarioName::Smooth3D, Variant::RealSG)->Arg(32)->Arg(64);

void BM_DiscreteEnergy(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto sc = make_scenario(ScenarioName::Smooth2D, std::vector<std::size_t>{n});
  ModelParams p;
  const State s = make_state(p, sc.u0, sc.u1);
  for (auto _ : st) benchmark::DoNotOptimize(state_energy(s));
}
BENCHMARK(BM_DiscreteEnergy)->Arg(64)->Arg(128);

}  // namespace
BENCHMARK_MAIN();
