// Microbenchmarks for the per-image extraction path: upsampling,
// connected components and region pooling dominate index build time.

#include <benchmark/benchmark.h>

#include "recnn/descriptors.hpp"
#include "recnn/prng.hpp"
#include "recnn/region_features.hpp"
#include "recnn/tensor_ops.hpp"

using namespace recnn;

namespace {

FeatureMap random_map(std::uint32_t h, std::uint32_t w, std::uint32_t c) {
  SplitMix64 rng(12345);
  FeatureMap map;
  map.height = h;
  map.width = w;
  map.channels = c;
  map.values.resize(static_cast<std::size_t>(h) * w * c);
  for (float& v : map.values)
    v = static_cast<float>(rng.next_double() * 2.0 - 1.0);
  return map;
}

// Blocky label maps give realistic region counts (a few dozen), unlike
// iid noise which fragments into thousands of one-pixel regions.
LabelMap blocky_labels(std::uint32_t side, std::uint32_t block,
                       std::uint32_t classes) {
  SplitMix64 rng(54321);
  LabelMap map;
  map.height = map.width = side;
  map.num_classes = classes;
  map.labels.resize(static_cast<std::size_t>(side) * side);
  const std::uint32_t blocks_per_row = (side + block - 1) / block;
  std::vector<std::uint8_t> cell(static_cast<std::size_t>(blocks_per_row) *
                                 blocks_per_row);
  for (auto& v : cell) v = static_cast<std::uint8_t>(rng.next_below(classes));
  for (std::uint32_t r = 0; r < side; ++r)
    for (std::uint32_t c = 0; c < side; ++c)
      map.labels[static_cast<std::size_t>(r) * side + c] =
          cell[static_cast<std::size_t>(r / block) * blocks_per_row +
               c / block];
  return map;
}

RasterImage random_image(std::uint32_t side) {
  SplitMix64 rng(999);
  RasterImage img;
  img.height = img.width = side;
  img.pixels.resize(static_cast<std::size_t>(side) * side * 3);
  for (auto& v : img.pixels)
    v = static_cast<std::uint8_t>(rng.next_below(256));
  return img;
}

}  // namespace

static void BM_BilinearUpsample(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  const FeatureMap map = random_map(side / 4, side / 4, 32);
  for (auto _ : state)
    benchmark::DoNotOptimize(bilinear_upsample(map, side, side));
  state.SetItemsProcessed(state.iterations() * side * side * 32);
}
BENCHMARK(BM_BilinearUpsample)->Unit(benchmark::kMicrosecond)->Arg(64)->Arg(256);

static void BM_ConnectedComponents(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  const LabelMap map = blocky_labels(side, side / 16, 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(connected_components(map));
  state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_ConnectedComponents)
    ->Unit(benchmark::kMicrosecond)
    ->Arg(64)
    ->Arg(256);

static void BM_RegionMaxPool(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  const LabelMap labels = blocky_labels(side, side / 8, 8);
  const auto [rmap, regions] = connected_components(labels);
  const LocalFeatureMatrix local =
      flatten_local_features(random_map(side, side, 32));
  for (auto _ : state)
    benchmark::DoNotOptimize(region_max_pool(local, rmap, regions, 1));
  state.SetItemsProcessed(state.iterations() * side * side * 32);
}
BENCHMARK(BM_RegionMaxPool)->Unit(benchmark::kMicrosecond)->Arg(64)->Arg(256);

static void BM_LbpDescriptor(benchmark::State& state) {
  const RasterImage img = random_image(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lbp_descriptor(img));
}
BENCHMARK(BM_LbpDescriptor)->Unit(benchmark::kMicrosecond)->Arg(64)->Arg(256);

static void BM_GlcmDescriptor(benchmark::State& state) {
  const RasterImage img = random_image(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(glcm_descriptor(img));
}
BENCHMARK(BM_GlcmDescriptor)->Unit(benchmark::kMicrosecond)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
