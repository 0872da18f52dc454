#include "recnn/region_features.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace recnn {

RegionFeatureSet region_max_pool(const LocalFeatureMatrix& features,
                                 const RegionLabelMap& rmap,
                                 const std::vector<Region>& regions,
                                 std::uint32_t min_region_px) {
  if (features.height != rmap.height || features.width != rmap.width)
    throw std::invalid_argument(
        "region_max_pool: feature grid does not match region map");

  const std::uint32_t ch = features.channels;
  const std::size_t n = regions.size();
  std::vector<std::vector<float>> pooled(n);
  for (std::size_t j = 0; j < n; ++j)
    pooled[j].assign(ch, -std::numeric_limits<float>::infinity());

  const std::size_t pixels = features.count();
  for (std::size_t i = 0; i < pixels; ++i) {
    const std::uint32_t id = rmap.region_ids[i];
    if (id == 0) continue;
    float* acc = pooled[id - 1].data();
    const float* x = features.values.data() + i * ch;
    for (std::uint32_t k = 0; k < ch; ++k)
      acc[k] = std::max(acc[k], x[k]);
  }

  RegionFeatureSet out;
  out.dim = ch;
  for (std::size_t j = 0; j < n; ++j) {
    if (regions[j].pixel_count < min_region_px) continue;
    out.regions.push_back({regions[j], std::move(pooled[j])});
  }
  return out;
}

std::vector<float> global_max_pool(const LocalFeatureMatrix& features) {
  const std::size_t m = features.count();
  if (m == 0 || features.channels == 0)
    throw std::invalid_argument("global_max_pool: empty feature matrix");

  std::vector<float> acc(features.values.begin(),
                         features.values.begin() + features.channels);
  for (std::size_t i = 1; i < m; ++i) {
    const float* x = features.values.data() + i * features.channels;
    for (std::uint32_t k = 0; k < features.channels; ++k)
      acc[k] = std::max(acc[k], x[k]);
  }
  return acc;
}

}  // namespace recnn
