#include <benchmark/benchmark.h>

#include <complex>

#include "zenolab/model.hpp"
#include "zenolab/oracle.hpp"
#include "zenolab/resolvent.hpp"
#include "zenolab/self_energy.hpp"
#include "zenolab/survival.hpp"

using namespace zenolab;

namespace {

const AtomParams& hydrogen() {
  static const AtomParams p = hydrogen_params(codata_constants(), 1);
  return p;
}

void BM_QbarClosedForm(benchmark::State& state) {
  std::complex<double> s{0.3, -0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbar({s, Sheet::first}));
    s += std::complex<double>(1e-12, 0.0);
  }
}
BENCHMARK(BM_QbarClosedForm);

void BM_QbarSeriesPatch(benchmark::State& state) {
  std::complex<double> s{1.01, 0.02};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbar({s, Sheet::first}));
    s += std::complex<double>(1e-12, 0.0);
  }
}
BENCHMARK(BM_QbarSeriesPatch);

void BM_QbarQuadrature(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(qbar_quadrature({2.0, 1.0}, 1e-10));
}
BENCHMARK(BM_QbarQuadrature);

void BM_FindPole(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_pole(hydrogen()));
}
BENCHMARK(BM_FindPole);

void BM_CutAdaptive(benchmark::State& state) {
  CutQuadratureSpec spec;
  for (auto _ : state)
    benchmark::DoNotOptimize(y_cut_term(1e4, hydrogen(), spec));
}
BENCHMARK(BM_CutAdaptive);

void BM_CutLaguerre(benchmark::State& state) {
  CutQuadratureSpec spec{CutMethod::gauss_laguerre, 1e-10, 400000};
  for (auto _ : state)
    benchmark::DoNotOptimize(y_cut_term(1e4, hydrogen(), spec));
}
BENCHMARK(BM_CutLaguerre);

void BM_SurvivalPoint(benchmark::State& state) {
  const auto pole = find_pole(hydrogen());
  for (auto _ : state)
    benchmark::DoNotOptimize(survival_point(1e-15, hydrogen(), pole));
}
BENCHMARK(BM_SurvivalPoint);

void BM_BromwichTau100(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(bromwich_inverse(100.0, hydrogen(), 0.5, 1e-8));
}
BENCHMARK(BM_BromwichTau100);

void BM_DiscretizedBuild(benchmark::State& state) {
  const auto p = custom_params(1.0, 1e-2, 0.25);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_discretized_model(p, state.range(0), 20.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DiscretizedBuild)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
