#include <benchmark/benchmark.h>

#include <cstdint>

#include "tokendig/coloring.hpp"
#include "tokendig/digraph.hpp"
#include "tokendig/enumerate.hpp"
#include "tokendig/families.hpp"
#include "tokendig/kernels.hpp"
#include "tokendig/scc.hpp"
#include "tokendig/subsets.hpp"
#include "tokendig/token.hpp"

using namespace tokendig;

namespace {

// Dense deterministic host: complete bidirected graph on n vertices.
Digraph dense_host(int n) { return bidirect(complete_graph(n)); }

void BM_TokenConstruction(benchmark::State& state) {
  const Digraph host = dense_host(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    TokenDigraph fk(host, k);
    benchmark::DoNotOptimize(fk.digraph().num_arcs());
  }
}
BENCHMARK(BM_TokenConstruction)
    ->Args({8, 2})
    ->Args({8, 4})
    ->Args({12, 2})
    ->Args({12, 6})
    ->Args({16, 2});

void BM_SccOfTokenDigraph(benchmark::State& state) {
  const Digraph fk =
      TokenDigraph(with_isolated(directed_cycle(6), 3),
                   static_cast<int>(state.range(0)))
          .digraph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(scc(fk).count());
  }
}
BENCHMARK(BM_SccOfTokenDigraph)->Arg(2)->Arg(4);

void BM_KernelSearchGadget(benchmark::State& state) {
  const GadgetDigraph g = reduce(example_formula());
  const Digraph f2 = TokenDigraph(g.digraph, 2).digraph();  // 153 nodes
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_kernel(f2).has_value());
  }
}
BENCHMARK(BM_KernelSearchGadget);

void BM_ChromaticNumberTokenGraph(benchmark::State& state) {
  const Graph g = token_graph(k8_minus_c5(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chromatic_number(g));
  }
}
BENCHMARK(BM_ChromaticNumberTokenGraph)->Arg(2)->Arg(4);

void BM_DichromaticNumber(benchmark::State& state) {
  const Digraph fk = TokenDigraph(directed_cycle(7), 3).digraph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dichromatic_number(fk));
  }
}
BENCHMARK(BM_DichromaticNumber);

void BM_ColexRoundTrip(benchmark::State& state) {
  const int n = 24, k = 6;  // 134596 subsets per iteration
  for (auto _ : state) {
    std::uint64_t mask = first_k_subset(k);
    std::uint64_t acc = 0;
    do {
      acc ^= colex_unrank(colex_rank(mask), k);
    } while (next_k_subset(mask, n));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ColexRoundTrip);

void BM_EnumerateConnectedGraphs(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(connected_graphs(6).size());
  }
}
BENCHMARK(BM_EnumerateConnectedGraphs);

}  // namespace
