#include <benchmark/benchmark.h>

#include "skewberger/curvature/curvature.hpp"
#include "skewberger/prolong/prolong.hpp"
#include "skewberger/registry/spec.hpp"

using namespace skb;

namespace {

lie::LieRep rep(const char* spec) { return registry::parse_spec(spec).build(); }

linalg::SolveOptions with(linalg::Arithmetic a) {
  linalg::SolveOptions o;
  o.arithmetic = a;
  return o;
}

void BM_BuildPartial(benchmark::State& state, const char* spec) {
  lie::LieRep a = rep(spec);
  for (auto _ : state) benchmark::DoNotOptimize(curvature::build_partial(a));
}

void BM_Rbar(benchmark::State& state, const char* spec, linalg::Arithmetic arith) {
  lie::LieRep a = rep(spec);
  for (auto _ : state) {
    auto cs = curvature::skew_curvature_space(a, with(arith));
    benchmark::DoNotOptimize(cs.dim());
  }
}

void BM_Prolong2(benchmark::State& state, const char* spec) {
  lie::LieRep a = rep(spec);
  for (auto _ : state) benchmark::DoNotOptimize(prolong::skew_prolongation(a, 2).g2.dim());
}

void BM_Spencer(benchmark::State& state, const char* spec) {
  lie::LieRep a = rep(spec);
  auto cs = curvature::skew_curvature_space(a);
  auto chain = prolong::skew_prolongation(a, 2);
  for (auto _ : state) benchmark::DoNotOptimize(prolong::spencer_h22(a, chain, cs).dim_h22);
}

void BM_Nabla(benchmark::State& state, const char* spec) {
  lie::LieRep a = rep(spec);
  auto cs = curvature::skew_curvature_space(a);
  for (auto _ : state) benchmark::DoNotOptimize(curvature::nabla_space(a, cs).dim());
}

void BM_RankMod(benchmark::State& state, const char* spec) {
  auto m = curvature::build_partial(rep(spec));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank_mod(m, 2147483647ULL));
}

}  // namespace

BENCHMARK_CAPTURE(BM_BuildPartial, so7_spin, "so(7):spin")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildPartial, sl6_wedge3, "sl(6):wedge(3)")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Rbar, so7_spin_rational, "so(7):spin", linalg::Arithmetic::rational)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Rbar, so7_spin_modular, "so(7):spin", linalg::Arithmetic::modular)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Rbar, sl6_wedge3_modular, "sl(6):wedge(3)", linalg::Arithmetic::modular)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Rbar, so10_spin_modular, "so(10):spin+", linalg::Arithmetic::modular)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);
BENCHMARK_CAPTURE(BM_Prolong2, gl8_std, "gl(8):std")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Spencer, gl5_wedge2, "gl(5):wedge(2)")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Nabla, sp8_std, "sp(8):std")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RankMod, so7_spin, "so(7):spin")->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
