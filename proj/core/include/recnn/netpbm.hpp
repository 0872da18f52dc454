#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recnn/raster.hpp"

namespace recnn {

// Binary netpbm carriers, maxval fixed to 255. The canonical encoding is
//   "P6\n<width> <height>\n255\n" + payload   (PPM)
//   "P5\n<width> <height>\n255\n" + payload   (PGM)
// Decoding accepts any whitespace between header tokens but rejects '#'
// comments, so encode(decode(x)) is the canonical byte stream.

RasterImage decode_ppm(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_ppm(const RasterImage& img);

// Labels are validated against {0..num_classes-1} u {255}.
LabelMap decode_pgm_labels(const std::vector<std::uint8_t>& bytes,
                           std::uint32_t num_classes);
std::vector<std::uint8_t> encode_pgm_labels(const LabelMap& map);

RasterImage read_ppm_file(const std::string& path);
void write_ppm_file(const std::string& path, const RasterImage& img);
LabelMap read_pgm_file(const std::string& path, std::uint32_t num_classes);
void write_pgm_file(const std::string& path, const LabelMap& map);

// Whole-file helpers shared by the binary readers.
std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path,
                      const std::vector<std::uint8_t>& bytes);

}  // namespace recnn
