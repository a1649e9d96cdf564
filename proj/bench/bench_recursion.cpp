#include <benchmark/benchmark.h>

#include "vvmf/mde.hpp"

namespace {

constexpr int kMaxOrder = 400;

const vvmf::MDESystem& shared_system() {
  static const vvmf::MDESystem sys = vvmf::build_mde(vvmf::validate_triple(1, 3, 7, 11), kMaxOrder);
  return sys;
}

void BM_Reference(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const auto& sys = shared_system();
  for (auto _ : state) benchmark::DoNotOptimize(vvmf::reference::minimal_vector(sys, T));
  state.SetComplexityN(T);
}

void BM_FractionFree(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const auto& sys = shared_system();
  for (auto _ : state) benchmark::DoNotOptimize(vvmf::minimal_vector(sys, T));
  state.SetComplexityN(T);
}

void BM_FractionFreeValuationsOnly(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const auto& sys = shared_system();
  for (auto _ : state) {
    const auto c = vvmf::solve_component(sys, vvmf::Labeling{0}, T);
    benchmark::DoNotOptimize(c.valuation(T, 11));
  }
  state.SetComplexityN(T);
}

void BM_BuildMDE(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const auto t = vvmf::validate_triple(1, 3, 7, 11);
  for (auto _ : state) benchmark::DoNotOptimize(vvmf::build_mde(t, T));
}

}  // namespace

BENCHMARK(BM_Reference)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FractionFree)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FractionFreeValuationsOnly)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildMDE)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
