#include <doctest.h>

#include <cstring>

#include "recnn/error.hpp"
#include "recnn/fmap.hpp"
#include "recnn/prng.hpp"
#include "test_util.hpp"

using namespace recnn;

namespace {

std::vector<std::uint8_t> header(std::uint32_t h, std::uint32_t w,
                                 std::uint32_t c) {
  std::vector<std::uint8_t> out = {'R', 'F', 'M', '1'};
  for (std::uint32_t v : {h, w, c})
    for (int i = 0; i < 4; ++i)
      out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  return out;
}

void push_f32(std::vector<std::uint8_t>& out, float f) {
  std::uint32_t u;
  std::memcpy(&u, &f, 4);
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<std::uint8_t>(u >> (8 * i)));
}

}  // namespace

TEST_CASE("fmap 1x1x2 is a 24-byte stream that round trips") {
  FeatureMap map;
  map.height = 1;
  map.width = 1;
  map.channels = 2;
  map.values = {1.5f, -2.0f};
  const auto bytes = encode_fmap(map);
  CHECK(bytes.size() == 24);
  const FeatureMap back = decode_fmap(bytes);
  CHECK(back.height == 1);
  CHECK(back.channels == 2);
  CHECK(back.values == map.values);
  CHECK(encode_fmap(back) == bytes);
}

TEST_CASE("fmap rejects malformed streams") {
  CHECK_THROWS_WITH_AS(decode_fmap({'X', 'F', 'M', '1', 0, 0, 0, 0, 0, 0, 0,
                                    0, 0, 0, 0, 0}),
                       doctest::Contains("magic"), FormatError);
  // zero-sized shape
  CHECK_THROWS_AS(decode_fmap(header(0, 3, 2)), FormatError);
  // shorter than the header implies
  auto truncated = header(1, 1, 2);
  push_f32(truncated, 1.0f);
  CHECK_THROWS_WITH_AS(decode_fmap(truncated), doctest::Contains("mismatch"),
                       FormatError);
  // longer than the header implies
  auto padded = header(1, 1, 1);
  push_f32(padded, 1.0f);
  padded.push_back(0);
  CHECK_THROWS_AS(decode_fmap(padded), FormatError);
  // non-finite payload
  auto nan_bytes = header(1, 1, 1);
  push_f32(nan_bytes, std::numeric_limits<float>::quiet_NaN());
  CHECK_THROWS_AS(decode_fmap(nan_bytes), DataError);
}

TEST_CASE("fmap random round trips") {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    const auto h = static_cast<std::uint32_t>(1 + rng.next_below(6));
    const auto w = static_cast<std::uint32_t>(1 + rng.next_below(6));
    const auto c = static_cast<std::uint32_t>(1 + rng.next_below(5));
    const FeatureMap map = testutil::random_feature_map(rng, h, w, c);
    const auto bytes = encode_fmap(map);
    CHECK(bytes.size() == 16 + map.values.size() * 4);
    const FeatureMap back = decode_fmap(bytes);
    CHECK(back.values == map.values);
    CHECK(encode_fmap(back) == bytes);
  }
}

TEST_CASE("fmap file io") {
  testutil::TempDir dir;
  SplitMix64 rng(5);
  const FeatureMap map = testutil::random_feature_map(rng, 3, 2, 4);
  write_fmap_file(dir.file("x.fmap"), map);
  CHECK(read_fmap_file(dir.file("x.fmap")).values == map.values);
}
