#include <doctest.h>

#include <fstream>

#include "recnn/error.hpp"
#include "recnn/fmap.hpp"
#include "recnn/index.hpp"
#include "recnn/netpbm.hpp"
#include "recnn/prng.hpp"
#include "test_util.hpp"

using namespace recnn;

namespace {

// Tiny hand-built archive: images are random, label maps use a small
// class set, feature maps are half resolution so the build has to
// upsample.
struct MiniArchive {
  testutil::TempDir dir;
  std::string manifest_path;
  std::vector<LabelMap> labels;
  std::vector<FeatureMap> fmaps;
  std::vector<RasterImage> images;

  explicit MiniArchive(int count, std::uint64_t seed,
                       std::uint32_t side = 8) {
    SplitMix64 rng(seed);
    std::ofstream manifest(dir.file("manifest.jsonl"));
    for (int i = 0; i < count; ++i) {
      const std::string id = "img" + std::to_string(i);
      images.push_back(testutil::random_image(rng, side, side));
      labels.push_back(testutil::random_label_map(rng, side, side, 3));
      fmaps.push_back(
          testutil::random_feature_map(rng, side / 2, side / 2, 4));
      write_ppm_file(dir.file(id + ".ppm"), images.back());
      write_pgm_file(dir.file(id + ".pgm"), labels.back());
      write_fmap_file(dir.file(id + ".fmap"), fmaps.back());
      manifest << "{\"id\":\"" << id << "\",\"class\":\"c"
               << (i % 2) << "\",\"image\":\"" << id
               << ".ppm\",\"labels\":\"" << id << ".pgm\",\"features\":\""
               << id << ".fmap\"}\n";
    }
    manifest_path = dir.file("manifest.jsonl");
  }
};

RetrievalIndex random_index(SplitMix64& rng, std::uint32_t entries,
                            std::uint32_t dim) {
  RetrievalIndex index;
  index.feature_dim = dim;
  for (std::uint32_t e = 0; e < entries; ++e) {
    IndexEntry entry;
    entry.image_id = "entry" + std::to_string(e);
    entry.class_label = "class" + std::to_string(e % 3);
    for (int c = 0; c < 4; ++c)
      if (rng.next_below(2) != 0)
        entry.multi_labels.labels.insert(static_cast<std::uint8_t>(c));
    entry.recnn.dim = dim;
    const std::uint64_t regions = 1 + rng.next_below(4);
    for (std::uint64_t j = 0; j < regions; ++j) {
      RegionFeature rf;
      rf.region.id = static_cast<std::uint32_t>(j + 1);
      rf.region.class_id = static_cast<std::uint8_t>(rng.next_below(4));
      rf.region.pixel_count = static_cast<std::uint32_t>(1 + rng.next_below(50));
      rf.descriptor.resize(dim);
      for (float& v : rf.descriptor)
        v = static_cast<float>(rng.next_double());
      entry.recnn.regions.push_back(std::move(rf));
    }
    entry.recnn_plus.resize(dim);
    for (float& v : entry.recnn_plus)
      v = static_cast<float>(rng.next_double());
    for (BaselineScheme s : {BaselineScheme::Stats, BaselineScheme::Color,
                             BaselineScheme::Lbp, BaselineScheme::Glcm}) {
      DescriptorVector d;
      d.scheme = s;
      d.values.resize(3 + rng.next_below(5));
      for (float& v : d.values) v = static_cast<float>(rng.next_double());
      entry.baselines.emplace(s, std::move(d));
    }
    index.entries.push_back(std::move(entry));
  }
  return index;
}

}  // namespace

TEST_CASE("build_index composes the documented pipeline") {
  MiniArchive archive(3, 101);
  const auto manifest = load_manifest(archive.manifest_path);
  const IndexConfig config;
  const RetrievalIndex index = build_index(manifest, config);
  REQUIRE(index.entries.size() == 3);
  CHECK(index.feature_dim == 4);

  // step-by-step oracle for image 0
  const LabelMap& labels = archive.labels[0];
  FeatureMap fmap = relu(archive.fmaps[0]);
  fmap = bilinear_upsample(fmap, labels.height, labels.width);
  const LocalFeatureMatrix local = flatten_local_features(std::move(fmap));
  const auto [rmap, regions] =
      connected_components(labels, Connectivity::Eight);
  const RegionFeatureSet expected = region_max_pool(local, rmap, regions, 1);

  const IndexEntry& entry = index.entries[0];
  CHECK(entry.image_id == "img0");
  REQUIRE(entry.recnn.size() == expected.size());
  for (std::size_t j = 0; j < expected.size(); ++j) {
    CHECK(entry.recnn.regions[j].descriptor == expected.regions[j].descriptor);
    CHECK(entry.recnn.regions[j].region.pixel_count ==
          expected.regions[j].region.pixel_count);
  }
  CHECK(entry.recnn_plus == global_max_pool(local));
  CHECK(entry.baselines.at(BaselineScheme::Color).values ==
        color_histogram(archive.images[0]).values);
  CHECK(entry.multi_labels == derive_multilabels(labels, 1));
}

TEST_CASE("build_index failures name the image") {
  MiniArchive archive(2, 103);
  const auto manifest = load_manifest(archive.manifest_path);

  IndexConfig drop_everything;
  drop_everything.min_region_px = 1000000;
  CHECK_THROWS_WITH_AS(build_index(manifest, drop_everything),
                       doctest::Contains("img0"), DataError);

  CHECK_THROWS_AS(build_index({}, IndexConfig{}), DataError);
}

TEST_CASE("rebuilding from identical inputs is byte-identical") {
  MiniArchive archive(3, 107);
  const auto manifest = load_manifest(archive.manifest_path);
  const auto a = encode_index(build_index(manifest, IndexConfig{}));
  const auto b = encode_index(build_index(manifest, IndexConfig{}));
  CHECK(a == b);
}

TEST_CASE("rix round trip preserves every persisted field") {
  SplitMix64 rng(109);
  for (int iter = 0; iter < 10; ++iter) {
    const RetrievalIndex index = random_index(rng, 4, 3);
    const auto bytes = encode_index(index);
    const RetrievalIndex back = decode_index(bytes);

    REQUIRE(back.entries.size() == index.entries.size());
    CHECK(back.feature_dim == index.feature_dim);
    for (std::size_t e = 0; e < index.entries.size(); ++e) {
      const IndexEntry& want = index.entries[e];
      const IndexEntry& got = back.entries[e];
      CHECK(got.image_id == want.image_id);
      CHECK(got.class_label == want.class_label);
      CHECK(got.multi_labels == want.multi_labels);
      REQUIRE(got.recnn.size() == want.recnn.size());
      for (std::size_t j = 0; j < want.recnn.size(); ++j) {
        CHECK(got.recnn.regions[j].descriptor ==
              want.recnn.regions[j].descriptor);
        CHECK(got.recnn.regions[j].region.class_id ==
              want.recnn.regions[j].region.class_id);
        CHECK(got.recnn.regions[j].region.pixel_count ==
              want.recnn.regions[j].region.pixel_count);
      }
      CHECK(got.recnn_plus == want.recnn_plus);
      for (const auto& [scheme, desc] : want.baselines)
        CHECK(got.baselines.at(scheme).values == desc.values);
    }
    // encode(decode(bytes)) reproduces the stream
    CHECK(encode_index(back) == bytes);
  }
}

TEST_CASE("rix decoder rejects corrupt streams") {
  SplitMix64 rng(113);
  const RetrievalIndex index = random_index(rng, 2, 3);
  auto bytes = encode_index(index);

  auto bad_magic = bytes;
  bad_magic[0] = 'Q';
  CHECK_THROWS_AS(decode_index(bad_magic), FormatError);

  auto truncated = bytes;
  truncated.resize(truncated.size() - 3);
  CHECK_THROWS_AS(decode_index(truncated), FormatError);

  auto trailing = bytes;
  trailing.push_back(0);
  CHECK_THROWS_WITH_AS(decode_index(trailing), doctest::Contains("trailing"),
                       FormatError);

  // out-of-order ids: swap the two entries' payloads by rebuilding
  RetrievalIndex swapped = index;
  std::swap(swapped.entries[0], swapped.entries[1]);
  CHECK_THROWS_WITH_AS(decode_index(encode_index(swapped)),
                       doctest::Contains("sorted"), FormatError);

  // implausible length fields must fail cleanly instead of allocating
  auto huge_dim = bytes;
  huge_dim[12] = huge_dim[13] = huge_dim[14] = huge_dim[15] = 0xFF;
  CHECK_THROWS_AS(decode_index(huge_dim), FormatError);
}

TEST_CASE("index file io and lookup") {
  testutil::TempDir dir;
  SplitMix64 rng(127);
  const RetrievalIndex index = random_index(rng, 3, 2);
  save_index(dir.file("a.rix"), index);
  const RetrievalIndex back = load_index(dir.file("a.rix"));
  CHECK(back.entries.size() == 3);
  CHECK(back.find("entry1") != nullptr);
  CHECK(back.find("entry1")->image_id == "entry1");
  CHECK(back.find("nope") == nullptr);
  CHECK_THROWS_AS(load_index(dir.file("missing.rix")), DataError);
}

TEST_CASE("inconsistent channel counts abort with the image id") {
  MiniArchive archive(2, 137);
  SplitMix64 rng(7);
  // image 1 gets a 6-channel map while image 0 has 4 channels
  write_fmap_file(archive.dir.file("img1.fmap"),
                  testutil::random_feature_map(rng, 4, 4, 6));
  const auto manifest = load_manifest(archive.manifest_path);
  CHECK_THROWS_WITH_AS(build_index(manifest, IndexConfig{}),
                       doctest::Contains("img1"), DataError);
}

TEST_CASE("mismatched label map dimensions abort with the image id") {
  MiniArchive archive(1, 131);
  // overwrite the label map with a smaller one
  SplitMix64 rng(5);
  write_pgm_file(archive.dir.file("img0.pgm"),
                 testutil::random_label_map(rng, 4, 4, 3));
  const auto manifest = load_manifest(archive.manifest_path);
  CHECK_THROWS_WITH_AS(build_index(manifest, IndexConfig{}),
                       doctest::Contains("img0"), DataError);
}
