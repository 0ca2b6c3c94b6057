#include <benchmark/benchmark.h>

#include <omrs/biclosed.hpp>
#include <omrs/verify.hpp>

#include <random>

namespace {

omrs::RootSlice slice_for(int which, int depth) {
  static const char* names[] = {"A2~", "C2~", "G2~", "universal3"};
  return omrs::enumerate_roots(omrs::CoxeterMatrix::named(names[which]), depth);
}

void BM_RootEnumeration(benchmark::State& state) {
  const auto cm = omrs::CoxeterMatrix::named("universal3");
  for (auto _ : state) benchmark::DoNotOptimize(omrs::enumerate_roots(cm, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RootEnumeration)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

// Sign-table closure against the Caratheodory reference on random sets.
void BM_Closure(benchmark::State& state) {
  const auto slice = std::make_shared<const omrs::RootSlice>(slice_for(1, 8));
  const auto m = omrs::OrientedMatroid::realizable(slice);
  std::mt19937_64 rng(1);
  std::vector<omrs::ElementSet> sets;
  for (int i = 0; i < 256; ++i) sets.push_back(omrs::random_subset(m.size(), rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& x = sets[i++ % sets.size()];
    if (state.range(0)) {
      benchmark::DoNotOptimize(m.closure(x));
    } else {
      benchmark::DoNotOptimize(omrs::cone_closure(*slice, x));
    }
  }
}
BENCHMARK(BM_Closure)->ArgName("table")->Arg(1)->Arg(0);

void BM_FlipSearch(benchmark::State& state) {
  const auto m = omrs::OrientedMatroid::realizable(slice_for(static_cast<int>(state.range(0)), 8));
  for (auto _ : state) benchmark::DoNotOptimize(omrs::enumerate_topes(m));
}
BENCHMARK(BM_FlipSearch)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_IncrementalCount(benchmark::State& state) {
  const auto s = slice_for(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(omrs::count_regions_incremental(s));
}
BENCHMARK(BM_IncrementalCount)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Biclosed(benchmark::State& state) {
  const auto s = state.range(0) ? slice_for(0, 6) : omrs::enumerate_all_roots(omrs::CoxeterMatrix::named("H3"));
  for (auto _ : state) benchmark::DoNotOptimize(omrs::enumerate_biclosed(s));
}
BENCHMARK(BM_Biclosed)->ArgName("affine")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Induction(benchmark::State& state) {
  const auto s = slice_for(0, 8);
  for (auto _ : state) benchmark::DoNotOptimize(omrs::simulate_induction(s, s.class_count()));
}
BENCHMARK(BM_Induction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
