#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recnn/raster.hpp"

namespace recnn {

// Feature-tensor carrier: magic "RFM1", then u32 height, width, channels,
// then height*width*channels IEEE-754 f32 values, row-major with the
// channel index fastest. All integers and floats little-endian.

FeatureMap decode_fmap(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_fmap(const FeatureMap& map);

FeatureMap read_fmap_file(const std::string& path);
void write_fmap_file(const std::string& path, const FeatureMap& map);

}  // namespace recnn
