#pragma once

#include <cstdint>
#include <vector>

#include "recnn/raster.hpp"

namespace recnn {

// Per-pixel region ids: 0 marks ignore pixels, real regions are numbered
// 1..n in raster order of their first pixel.
struct RegionLabelMap {
  std::uint32_t height = 0;
  std::uint32_t width = 0;
  std::vector<std::uint32_t> region_ids;

  std::uint32_t at(std::uint32_t row, std::uint32_t col) const {
    return region_ids[static_cast<std::size_t>(row) * width + col];
  }
};

struct Region {
  std::uint32_t id = 0;
  std::uint8_t class_id = 0;   // shared by every member pixel
  std::uint32_t pixel_count = 0;
  std::uint32_t min_row = 0, min_col = 0, max_row = 0, max_col = 0;
};

enum class Connectivity : int { Four = 4, Eight = 8 };

Connectivity connectivity_from_int(int value);

// Maximal sets of equal-label pixels connected under the chosen adjacency.
// Ignore pixels (255) get region id 0 and never join a region. Two-pass
// union-find; the resulting partition and numbering are deterministic.
std::pair<RegionLabelMap, std::vector<Region>> connected_components(
    const LabelMap& map, Connectivity connectivity = Connectivity::Eight);

}  // namespace recnn
