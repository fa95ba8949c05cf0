#include <benchmark/benchmark.h>

#include "cscodes/harmonics.hpp"
#include "cscodes/schemes.hpp"
#include "cscodes/sdp_model.hpp"
#include "cscodes/sdp_solver.hpp"

using namespace cscodes;

namespace {

InnerProductSet twocode_set(int d) {
  const std::string a = std::to_string(d - 1), b = std::to_string(d);
  return InnerProductSet::parse({"(" + a + "+i)/" + b, "(" + a + "-i)/" + b});
}

void BM_JacobiEvalExact(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const JacobiSpec g = jacobi(63, k, k);
  const QuadComplex x = QuadComplex::parse("31/666 + 1/666*sqrt(4699)*i");
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eval(g, x));
}
BENCHMARK(BM_JacobiEvalExact)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_BuildProblem(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const InnerProductSet A = twocode_set(5);
  for (auto _ : state) benchmark::DoNotOptimize(build_problem(5, A, p));
}
BENCHMARK(BM_BuildProblem)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SolveTwoCode(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const SdpProblem problem = build_problem(d, twocode_set(d), 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve(problem));
}
BENCHMARK(BM_SolveTwoCode)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_NonexistenceScan(benchmark::State& state) {
  const CodeEmbedding emb = embed(builtin_fixture("mw-889"), 2);
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nonexistence_scan(emb, p));
}
BENCHMARK(BM_NonexistenceScan)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
