#include "recnn/fmap.hpp"

#include <cmath>
#include <cstring>

#include "recnn/error.hpp"
#include "recnn/netpbm.hpp"

namespace recnn {
namespace {

constexpr char kMagic[4] = {'R', 'F', 'M', '1'};
constexpr std::size_t kHeaderSize = 16;

std::uint32_t load_u32le(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void store_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 24));
}

}  // namespace

FeatureMap decode_fmap(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kHeaderSize)
    throw FormatError("fmap: file shorter than 16-byte header");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw FormatError("fmap: bad magic, expected \"RFM1\"");

  FeatureMap map;
  map.height = load_u32le(bytes.data() + 4);
  map.width = load_u32le(bytes.data() + 8);
  map.channels = load_u32le(bytes.data() + 12);

  const std::uint64_t count = static_cast<std::uint64_t>(map.height) *
                              map.width * map.channels;
  if (count == 0)
    throw FormatError("fmap: degenerate shape " + std::to_string(map.height) +
                      "x" + std::to_string(map.width) + "x" +
                      std::to_string(map.channels));
  const std::uint64_t expected = kHeaderSize + count * 4;
  if (bytes.size() != expected) {
    throw FormatError("fmap: size mismatch, header implies " +
                      std::to_string(expected) + " bytes but file has " +
                      std::to_string(bytes.size()));
  }

  map.values.resize(count);
  // f32 little-endian payload; memcpy is exact on LE hosts, and the
  // byte-shuffle below keeps BE hosts correct too.
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint8_t* p = bytes.data() + kHeaderSize + i * 4;
    std::uint32_t u = load_u32le(p);
    float f;
    std::memcpy(&f, &u, 4);
    if (!std::isfinite(f)) {
      throw DataError("fmap: non-finite value at flat index " +
                      std::to_string(i));
    }
    map.values[i] = f;
  }
  return map;
}

std::vector<std::uint8_t> encode_fmap(const FeatureMap& map) {
  const std::uint64_t count = static_cast<std::uint64_t>(map.height) *
                              map.width * map.channels;
  if (count == 0 || map.values.size() != count)
    throw DataError("fmap: map shape does not match value count");

  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + count * 4);
  out.insert(out.end(), kMagic, kMagic + 4);
  store_u32le(out, map.height);
  store_u32le(out, map.width);
  store_u32le(out, map.channels);
  for (float f : map.values) {
    std::uint32_t u;
    std::memcpy(&u, &f, 4);
    store_u32le(out, u);
  }
  return out;
}

FeatureMap read_fmap_file(const std::string& path) {
  try {
    return decode_fmap(read_file_bytes(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_fmap_file(const std::string& path, const FeatureMap& map) {
  write_file_bytes(path, encode_fmap(map));
}

}  // namespace recnn
