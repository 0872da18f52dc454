#pragma once

#include <cstdint>
#include <vector>

#include "recnn/regions.hpp"
#include "recnn/tensor_ops.hpp"

namespace recnn {

struct RegionFeature {
  Region region;
  std::vector<float> descriptor;  // elementwise max over member pixels
};

struct RegionFeatureSet {
  std::uint32_t dim = 0;
  std::vector<RegionFeature> regions;

  bool empty() const { return regions.empty(); }
  std::size_t size() const { return regions.size(); }
};

// Region-wise max pooling of the local descriptors. Regions with fewer
// than min_region_px pixels are dropped; surviving regions keep their ids
// and appear in id order.
RegionFeatureSet region_max_pool(const LocalFeatureMatrix& features,
                                 const RegionLabelMap& rmap,
                                 const std::vector<Region>& regions,
                                 std::uint32_t min_region_px = 1);

// Elementwise max over all columns; the whole-image pooled vector.
std::vector<float> global_max_pool(const LocalFeatureMatrix& features);

}  // namespace recnn
