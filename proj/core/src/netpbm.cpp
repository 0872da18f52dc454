#include "recnn/netpbm.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>

#include "recnn/error.hpp"

namespace recnn {
namespace {

struct Cursor {
  const std::vector<std::uint8_t>& bytes;
  std::size_t pos = 0;

  bool eof() const { return pos >= bytes.size(); }
  std::uint8_t peek() const { return bytes[pos]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("netpbm: " + what + " at byte " + std::to_string(pos));
  }

  void skip_whitespace(const char* context) {
    if (eof() || !std::isspace(peek()))
      fail(std::string("expected whitespace before ") + context);
    while (!eof() && std::isspace(peek())) {
      ++pos;
    }
    if (!eof() && peek() == '#')
      fail("comments are not allowed in canonical headers");
  }

  // Unsigned decimal token; overflow past 32 bits is a format error.
  std::uint32_t read_uint(const char* context) {
    if (eof() || !std::isdigit(peek()))
      fail(std::string("expected digit in ") + context);
    std::uint64_t v = 0;
    while (!eof() && std::isdigit(peek())) {
      v = v * 10 + (peek() - '0');
      if (v > 0xFFFFFFFFULL) fail(std::string(context) + " out of range");
      ++pos;
    }
    return static_cast<std::uint32_t>(v);
  }
};

// Parses "P<digit> W H MAXVAL" and the single whitespace byte that
// separates the header from the payload. Returns payload offset.
std::size_t parse_header(Cursor& cur, char expected_type,
                         std::uint32_t& width, std::uint32_t& height) {
  if (cur.bytes.size() < 2 || cur.bytes[0] != 'P' ||
      cur.bytes[1] != static_cast<std::uint8_t>(expected_type)) {
    throw FormatError(std::string("netpbm: expected magic 'P") +
                      expected_type + "' at byte 0");
  }
  cur.pos = 2;
  cur.skip_whitespace("width");
  const std::size_t dims_pos = cur.pos;
  width = cur.read_uint("width");
  cur.skip_whitespace("height");
  height = cur.read_uint("height");
  cur.skip_whitespace("maxval");
  const std::size_t maxval_pos = cur.pos;
  const std::uint32_t maxval = cur.read_uint("maxval");
  if (maxval != 255) {
    throw FormatError("netpbm: maxval must be 255, got " +
                      std::to_string(maxval) + " at byte " +
                      std::to_string(maxval_pos));
  }
  if (cur.eof() || !std::isspace(cur.peek()))
    cur.fail("expected single whitespace after maxval");
  ++cur.pos;
  if (width == 0 || height == 0) {
    throw FormatError("netpbm: zero dimension " + std::to_string(width) +
                      "x" + std::to_string(height) + " at byte " +
                      std::to_string(dims_pos));
  }
  return cur.pos;
}

void check_payload(const Cursor& cur, std::size_t expected) {
  const std::size_t have = cur.bytes.size() - cur.pos;
  if (have < expected) {
    throw FormatError("netpbm: truncated payload, expected " +
                      std::to_string(expected) + " bytes but found " +
                      std::to_string(have) + " at byte " +
                      std::to_string(cur.pos));
  }
  if (have > expected) {
    throw FormatError("netpbm: " + std::to_string(have - expected) +
                      " trailing bytes at byte " +
                      std::to_string(cur.pos + expected));
  }
}

void append_header(std::vector<std::uint8_t>& out, char type,
                   std::uint32_t width, std::uint32_t height) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof(buf), "P%c\n%u %u\n255\n", type,
                              width, height);
  out.insert(out.end(), buf, buf + n);
}

}  // namespace

RasterImage decode_ppm(const std::vector<std::uint8_t>& bytes) {
  Cursor cur{bytes};
  RasterImage img;
  parse_header(cur, '6', img.width, img.height);
  const std::size_t count =
      static_cast<std::size_t>(img.width) * img.height * 3;
  check_payload(cur, count);
  img.pixels.assign(bytes.begin() + cur.pos, bytes.end());
  return img;
}

std::vector<std::uint8_t> encode_ppm(const RasterImage& img) {
  std::vector<std::uint8_t> out;
  out.reserve(img.pixels.size() + 32);
  append_header(out, '6', img.width, img.height);
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

LabelMap decode_pgm_labels(const std::vector<std::uint8_t>& bytes,
                           std::uint32_t num_classes) {
  Cursor cur{bytes};
  LabelMap map;
  map.num_classes = num_classes;
  const std::size_t payload = parse_header(cur, '5', map.width, map.height);
  const std::size_t count = static_cast<std::size_t>(map.width) * map.height;
  check_payload(cur, count);
  map.labels.assign(bytes.begin() + cur.pos, bytes.end());
  for (std::size_t i = 0; i < map.labels.size(); ++i) {
    const std::uint8_t v = map.labels[i];
    if (v != LabelMap::kIgnore && v >= num_classes) {
      throw DataError("labelmap: class id " + std::to_string(v) +
                      " >= num_classes " + std::to_string(num_classes) +
                      " at pixel (" + std::to_string(i / map.width) + "," +
                      std::to_string(i % map.width) + "), byte " +
                      std::to_string(payload + i));
    }
  }
  return map;
}

std::vector<std::uint8_t> encode_pgm_labels(const LabelMap& map) {
  std::vector<std::uint8_t> out;
  out.reserve(map.labels.size() + 32);
  append_header(out, '5', map.width, map.height);
  out.insert(out.end(), map.labels.begin(), map.labels.end());
  return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw DataError("read failed: " + path);
  return bytes;
}

void write_file_bytes(const std::string& path,
                      const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("write failed: " + path);
}

RasterImage read_ppm_file(const std::string& path) {
  try {
    return decode_ppm(read_file_bytes(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_ppm_file(const std::string& path, const RasterImage& img) {
  write_file_bytes(path, encode_ppm(img));
}

LabelMap read_pgm_file(const std::string& path, std::uint32_t num_classes) {
  try {
    return decode_pgm_labels(read_file_bytes(path), num_classes);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_pgm_file(const std::string& path, const LabelMap& map) {
  write_file_bytes(path, encode_pgm_labels(map));
}

}  // namespace recnn
