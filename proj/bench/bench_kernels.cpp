// Serial reference vs dense vs OpenMP kernels, and serial vs parallel batch audit.

#include <benchmark/benchmark.h>

#include "jung/batch.hpp"
#include "jung/generator.hpp"

using namespace jung;

namespace {

Polynomial operand(unsigned tri_degree, std::uint64_t seed) {
  GenConfig g;
  g.seed = seed;
  g.depth = 5;
  g.max_tri_degree = tri_degree;
  return random_tame(g).map.p;
}

std::vector<PolyMap> audit_corpus(int n) {
  std::vector<PolyMap> maps;
  for (int s = 1; s <= n; ++s) {
    GenConfig g;
    g.seed = static_cast<std::uint64_t>(s);
    g.depth = 1 + static_cast<unsigned>(s % 5);
    g.max_tri_degree = 2 + static_cast<unsigned>(s % 3);
    maps.push_back(random_tame(g).map);
  }
  return maps;
}

template <Polynomial (*Mul)(const Polynomial&, const Polynomial&)>
void BM_Mul(benchmark::State& state) {
  Polynomial a = operand(static_cast<unsigned>(state.range(0)), 3);
  Polynomial b = operand(static_cast<unsigned>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
  state.counters["terms"] = static_cast<double>(a.size() * b.size());
}

void BM_AuditSerial(benchmark::State& state) {
  auto maps = audit_corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit_serial(maps));
}

void BM_AuditParallel(benchmark::State& state) {
  auto maps = audit_corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit_parallel(maps));
}

void BM_VerifySerial(benchmark::State& state) {
  auto maps = audit_corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_serial(maps));
}

void BM_VerifyParallel(benchmark::State& state) {
  auto maps = audit_corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_parallel(maps));
}

}  // namespace

BENCHMARK(BM_Mul<PolyKernels::mul_reference>)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Mul<PolyKernels::mul_dense>)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Mul<PolyKernels::mul_parallel>)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AuditSerial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditParallel)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
