#include <benchmark/benchmark.h>

#include "treeperm/iso.hpp"
#include "treeperm/perm_hopf.hpp"
#include "treeperm/tree_hopf.hpp"
#include "treeperm/verify.hpp"

namespace {

using namespace treeperm;

void BM_EnumerateTrees(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto trees = enumerate_trees(n);
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(BM_EnumerateTrees)->Arg(5)->Arg(7)->Arg(8);

void BM_EnumeratePerms(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto perms = enumerate_perms(n);
    benchmark::DoNotOptimize(perms);
  }
}
BENCHMARK(BM_EnumeratePerms)->Arg(5)->Arg(7)->Arg(8);

void BM_TreeProduct(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto basis = enumerate_trees(n);
  for (auto _ : state) {
    for (const auto& t1 : basis) {
      auto p = tree_product(t1, basis.front());
      benchmark::DoNotOptimize(p);
    }
  }
  state.SetItemsProcessed(state.iterations() * basis.size());
}
BENCHMARK(BM_TreeProduct)->Arg(3)->Arg(4);

void BM_HeapProduct(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto basis = enumerate_perms(n);
  for (auto _ : state) {
    for (const auto& p1 : basis) {
      auto p = heap_product(p1, basis.front());
      benchmark::DoNotOptimize(p);
    }
  }
  state.SetItemsProcessed(state.iterations() * basis.size());
}
BENCHMARK(BM_HeapProduct)->Arg(3)->Arg(4);

void BM_TreeCoproduct(benchmark::State& state) {
  auto basis = enumerate_trees(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& t : basis) {
      auto d = tree_coproduct(t);
      benchmark::DoNotOptimize(d);
    }
  }
}
BENCHMARK(BM_TreeCoproduct)->Arg(5);

void BM_PhiRoundTrip(benchmark::State& state) {
  auto basis = enumerate_trees(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& t : basis) {
      auto back = phi_inv(phi(t));
      benchmark::DoNotOptimize(back);
    }
  }
}
BENCHMARK(BM_PhiRoundTrip)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
