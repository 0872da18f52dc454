// Query-side costs: the region-set distance is quadratic in region count
// per image pair, the vector schemes are linear scans.

#include <benchmark/benchmark.h>

#include "recnn/distance.hpp"
#include "recnn/prng.hpp"

using namespace recnn;

namespace {

RegionFeatureSet random_set(SplitMix64& rng, std::size_t regions,
                            std::size_t dim) {
  RegionFeatureSet set;
  set.dim = static_cast<std::uint32_t>(dim);
  for (std::size_t j = 0; j < regions; ++j) {
    RegionFeature rf;
    rf.region.id = static_cast<std::uint32_t>(j + 1);
    rf.region.pixel_count = 1;
    rf.descriptor.resize(dim);
    for (float& v : rf.descriptor)
      v = static_cast<float>(rng.next_double());
    set.regions.push_back(std::move(rf));
  }
  return set;
}

}  // namespace

static void BM_RegionSetDistance(benchmark::State& state) {
  SplitMix64 rng(777);
  const auto regions = static_cast<std::size_t>(state.range(0));
  const auto dim = static_cast<std::size_t>(state.range(1));
  const RegionFeatureSet q = random_set(rng, regions, dim);
  const RegionFeatureSet r = random_set(rng, regions, dim);
  for (auto _ : state) benchmark::DoNotOptimize(region_set_distance(q, r));
  state.SetItemsProcessed(state.iterations() * regions * regions * dim);
}
BENCHMARK(BM_RegionSetDistance)
    ->Unit(benchmark::kMicrosecond)
    ->Args({8, 64})
    ->Args({32, 512});

static void BM_VectorDistance(benchmark::State& state) {
  SplitMix64 rng(778);
  std::vector<float> a(static_cast<std::size_t>(state.range(0)));
  std::vector<float> b(a.size());
  for (float& v : a) v = static_cast<float>(rng.next_double());
  for (float& v : b) v = static_cast<float>(rng.next_double());
  const Norm norm = state.range(1) == 0 ? Norm::L1 : Norm::L2;
  for (auto _ : state) benchmark::DoNotOptimize(vector_distance(a, b, norm));
}
BENCHMARK(BM_VectorDistance)
    ->Args({96, 0})
    ->Args({512, 0})
    ->Args({512, 1});

BENCHMARK_MAIN();
