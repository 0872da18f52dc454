#pragma once

#include <cstdint>
#include <set>

#include "recnn/raster.hpp"

namespace recnn {

// Set of pixel classes present in an image. The ignore label never
// appears here.
struct MultiLabelSet {
  std::set<std::uint8_t> labels;

  bool intersects(const MultiLabelSet& other) const {
    auto a = labels.begin();
    auto b = other.labels.begin();
    while (a != labels.end() && b != other.labels.end()) {
      if (*a == *b) return true;
      if (*a < *b)
        ++a;
      else
        ++b;
    }
    return false;
  }

  bool operator==(const MultiLabelSet&) const = default;
};

// Class c is included iff at least min_pixels pixels carry it.
// Monotone non-increasing in min_pixels.
MultiLabelSet derive_multilabels(const LabelMap& map,
                                 std::uint32_t min_pixels = 1);

}  // namespace recnn
