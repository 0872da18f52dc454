#pragma once

#include <cstdint>
#include <vector>

namespace recnn {

// 8-bit RGB image, row-major, interleaved channels.
struct RasterImage {
  std::uint32_t height = 0;
  std::uint32_t width = 0;
  std::vector<std::uint8_t> pixels;  // height * width * 3

  std::uint8_t* pixel(std::uint32_t row, std::uint32_t col) {
    return pixels.data() + (static_cast<std::size_t>(row) * width + col) * 3;
  }
  const std::uint8_t* pixel(std::uint32_t row, std::uint32_t col) const {
    return pixels.data() + (static_cast<std::size_t>(row) * width + col) * 3;
  }
};

// Per-pixel class ids. 255 is the ignore sentinel; everything else must be
// < num_classes.
struct LabelMap {
  static constexpr std::uint8_t kIgnore = 255;

  std::uint32_t height = 0;
  std::uint32_t width = 0;
  std::uint32_t num_classes = 0;
  std::vector<std::uint8_t> labels;  // height * width, row-major

  std::uint8_t at(std::uint32_t row, std::uint32_t col) const {
    return labels[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t& at(std::uint32_t row, std::uint32_t col) {
    return labels[static_cast<std::size_t>(row) * width + col];
  }
};

// Dense H x W x C activations, row-major with the channel index fastest:
// the C values of one pixel are contiguous.
struct FeatureMap {
  std::uint32_t height = 0;
  std::uint32_t width = 0;
  std::uint32_t channels = 0;
  std::vector<float> values;  // height * width * channels

  float* at(std::uint32_t row, std::uint32_t col) {
    return values.data() +
           (static_cast<std::size_t>(row) * width + col) * channels;
  }
  const float* at(std::uint32_t row, std::uint32_t col) const {
    return values.data() +
           (static_cast<std::size_t>(row) * width + col) * channels;
  }
};

}  // namespace recnn
