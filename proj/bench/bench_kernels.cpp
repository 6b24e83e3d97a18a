#include <benchmark/benchmark.h>

#include "blowup/checks.hpp"
#include "blowup/quadrature.hpp"

using namespace blowup;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_MonteCarloBall(benchmark::State& state) {
  QuadratureOptions o;
  o.exec = exec_of(state);
  const LocalHamiltonian h{{1, 2, 3}, 0.5, {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_ball(h, 0.5, 3, Scheme::monte_carlo, o).value);
  }
}

void BM_AnnulusGauss(benchmark::State& state) {
  QuadratureOptions o;
  o.exec = exec_of(state);
  const LocalModelParams p = LocalModelParams::make(3, 0.4, 0.2, 1.0);
  const LocalHamiltonian h{{1, 2, 3}, 0.0, {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_annulus_pushforward(h, p, Scheme::product_gauss, o).relative_deviation);
  }
}

void BM_Pullback(benchmark::State& state) {
  PullbackOptions o;
  o.exec = exec_of(state);
  o.samples = 5000;
  const LocalModelParams p = LocalModelParams::make(3, 0.4, 0.2, 1.0);
  const CMat psi = UnitaryLoop::diagonal({1, 2, 3}).at(0.3);
  const ChartMap map = [&](const CVec& z) -> CVec { return psi * z; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(symplectic_pullback_check(map, p, o).max_deviation());
  }
}

}  // namespace

BENCHMARK(BM_MonteCarloBall)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnnulusGauss)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pullback)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
