#include <string>

#include <benchmark/benchmark.h>

#include "ldlog/elaborator.h"
#include "ldlog/forward_chain.h"
#include "ldlog/parser.h"
#include "ldlog/solver.h"

namespace {

// A directed chain of `n` edges with a transitive-closure rule and one query
// per reachable endpoint.
std::string chain_program(int n) {
  std::string src =
      "r1: path(x, y) :- edge(x, y).\n"
      "r2: path(x, y) :- path(x, z), edge(z, y).\n";
  for (int i = 0; i < n; ++i) {
    src += "edge(" + std::to_string(i) + ", " + std::to_string(i + 1) + ").\n";
  }
  src += "path(0, m?)?\n";
  return src;
}

void BM_SolveChainAll(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ldlog::ElaboratedProgram p =
      ldlog::elaborate(ldlog::parse_program(chain_program(n)));
  ldlog::SolverConfig cfg;
  cfg.max_depth = static_cast<std::size_t>(n) + 1;
  cfg.solution_limit.reset();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ldlog::solve(p.kb, p.queries[0], cfg));
  }
}
BENCHMARK(BM_SolveChainAll)->Arg(4)->Arg(8)->Arg(16);

void BM_SolveChainNoMemo(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ldlog::ElaboratedProgram p =
      ldlog::elaborate(ldlog::parse_program(chain_program(n)));
  ldlog::SolverConfig cfg;
  cfg.max_depth = static_cast<std::size_t>(n) + 1;
  cfg.solution_limit.reset();
  cfg.memoize = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ldlog::solve(p.kb, p.queries[0], cfg));
  }
}
BENCHMARK(BM_SolveChainNoMemo)->Arg(4)->Arg(6);

void BM_Saturate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ldlog::ElaboratedProgram p =
      ldlog::elaborate(ldlog::parse_program(chain_program(n)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ldlog::saturate(p.kb));
  }
}
BENCHMARK(BM_Saturate)->Arg(8)->Arg(16);

void BM_ParseProgram(benchmark::State& state) {
  std::string src = chain_program(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ldlog::parse_program(src));
  }
}
BENCHMARK(BM_ParseProgram)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
