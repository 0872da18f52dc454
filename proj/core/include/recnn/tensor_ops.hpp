#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "recnn/raster.hpp"

namespace recnn {

// Per-pixel descriptors of one image: column i holds the C feature values
// of pixel (i / width, i % width). Shares the FeatureMap layout, so a
// column is a contiguous slice.
struct LocalFeatureMatrix {
  std::uint32_t height = 0;
  std::uint32_t width = 0;
  std::uint32_t channels = 0;
  std::vector<float> values;

  std::size_t count() const {
    return static_cast<std::size_t>(height) * width;
  }
  std::span<const float> column(std::size_t i) const {
    return {values.data() + i * channels, channels};
  }
  std::pair<std::uint32_t, std::uint32_t> coord_of(std::size_t i) const {
    return {static_cast<std::uint32_t>(i / width),
            static_cast<std::uint32_t>(i % width)};
  }
};

// Elementwise max(v, 0); shape unchanged.
FeatureMap relu(const FeatureMap& map);

// Half-pixel-center bilinear upsampling: source coordinate for output
// sample i is (i + 0.5) * in / out - 0.5, clamped to [0, in - 1].
// Channels are interpolated independently. Output values are clamped to
// the range of the four contributing samples, so constants reproduce
// exactly and results never leave [min(input), max(input)].
// Requires out_h >= height and out_w >= width.
FeatureMap bilinear_upsample(const FeatureMap& map, std::uint32_t out_h,
                             std::uint32_t out_w);

// Reinterprets the map as m = H*W local descriptors in row-major order.
LocalFeatureMatrix flatten_local_features(FeatureMap map);

}  // namespace recnn
