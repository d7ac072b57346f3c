#include <benchmark/benchmark.h>

#include <vector>

#include "ringoid/congruences.hpp"
#include "ringoid/ideals.hpp"
#include "ringoid/search.hpp"
#include "ringoid/symmetry.hpp"

using namespace ringoid;

namespace {

SearchSpec count_spec(std::size_t n, bool commutative) {
  SearchSpec s;
  s.order             = n;
  s.times_commutative = commutative;
  s.count_only        = true;
  return s;
}

std::vector<Ringoid> const& order4_semirings() {
  static auto const all = [] {
    SearchSpec s;
    s.order  = 4;
    s.filter = SimplicityFilter::All;
    return *enumerate(s).ringoids;
  }();
  return all;
}

void BM_AdditiveSkeletons(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_additive_skeletons(n));
  }
}
BENCHMARK(BM_AdditiveSkeletons)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_CountGeneral(benchmark::State& state) {
  auto const spec = count_spec(static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate(spec).counts);
  }
}
BENCHMARK(BM_CountGeneral)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CountCommutative(benchmark::State& state) {
  auto const spec = count_spec(static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate(spec).counts);
  }
}
BENCHMARK(BM_CountCommutative)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PruneOff(benchmark::State& state) {
  auto spec  = count_spec(5, false);
  spec.prune = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate(spec).counts);
  }
}
BENCHMARK(BM_PruneOff)->Unit(benchmark::kMillisecond);

void BM_CongruenceSimple(benchmark::State& state) {
  auto const& rs = order4_semirings();
  for (auto _ : state) {
    std::size_t simple = 0;
    for (auto const& r : rs) {
      simple += is_congruence_simple(r);
    }
    benchmark::DoNotOptimize(simple);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rs.size()));
}
BENCHMARK(BM_CongruenceSimple);

void BM_KIdealSimple(benchmark::State& state) {
  auto const& rs   = order4_semirings();
  bool const  fast = state.range(0) != 0;
  for (auto _ : state) {
    std::size_t simple = 0;
    for (auto const& r : rs) {
      simple += fast ? k_ideal_simple_fast(r) : is_k_ideal_simple(r);
    }
    benchmark::DoNotOptimize(simple);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rs.size()));
}
BENCHMARK(BM_KIdealSimple)->ArgName("fast")->Arg(0)->Arg(1);

void BM_CanonicalForm(benchmark::State& state) {
  auto const& rs = order4_semirings();
  for (auto _ : state) {
    for (auto const& r : rs) {
      benchmark::DoNotOptimize(canonical_form(r, false));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rs.size()));
}
BENCHMARK(BM_CanonicalForm);

void BM_TransitiveScan(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_transitive_groupoids(n, {}));
  }
}
BENCHMARK(BM_TransitiveScan)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
