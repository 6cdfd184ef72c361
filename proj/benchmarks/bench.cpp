#include <benchmark/benchmark.h>

#include "j4free/galois.hpp"
#include "j4free/incidence.hpp"
#include "j4free/planes.hpp"
#include "j4free/singer.hpp"

using namespace j4free;

static void BM_FieldCreate(benchmark::State& state) {
  const auto h = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(FieldCtx::create(2, h).order());
}
BENCHMARK(BM_FieldCreate)->Arg(6)->Arg(12)->Arg(18);

static void BM_Pg2Singer(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pg2_singer(q).base_block.size());
}
BENCHMARK(BM_Pg2Singer)->Arg(16)->Arg(64)->Arg(128);

static void BM_IsJ4Free(benchmark::State& state) {
  const auto m = pg2_singer(static_cast<std::uint32_t>(state.range(0))).incidence();
  for (auto _ : state) benchmark::DoNotOptimize(is_j4_free(m));
}
BENCHMARK(BM_IsJ4Free)->Arg(8)->Arg(16)->Arg(32);

static void BM_BipartiteGirth(benchmark::State& state) {
  const auto m = pg2_singer(static_cast<std::uint32_t>(state.range(0))).incidence();
  for (auto _ : state) benchmark::DoNotOptimize(bipartite_girth(m));
}
BENCHMARK(BM_BipartiteGirth)->Arg(8)->Arg(16);

static void BM_OrbitDecompose(benchmark::State& state) {
  const auto cfg = pg2_singer(static_cast<std::uint32_t>(state.range(0)));
  const auto d = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_decompose(cfg, d).w.size());
}
BENCHMARK(BM_OrbitDecompose)->Args({16, 91})->Args({32, 151})->Args({64, 1387});
BENCHMARK_MAIN();
