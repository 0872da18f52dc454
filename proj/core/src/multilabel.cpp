#include "recnn/multilabel.hpp"

#include <array>
#include <stdexcept>

namespace recnn {

MultiLabelSet derive_multilabels(const LabelMap& map,
                                 std::uint32_t min_pixels) {
  if (min_pixels < 1)
    throw std::invalid_argument("derive_multilabels: min_pixels must be >= 1");

  std::array<std::uint64_t, 256> counts{};
  for (std::uint8_t v : map.labels) counts[v]++;

  MultiLabelSet out;
  for (int c = 0; c < 255; ++c) {
    if (counts[c] >= min_pixels)
      out.labels.insert(static_cast<std::uint8_t>(c));
  }
  return out;
}

}  // namespace recnn
