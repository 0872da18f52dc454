#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "recnn/descriptors.hpp"
#include "recnn/manifest.hpp"
#include "recnn/multilabel.hpp"
#include "recnn/region_features.hpp"

namespace recnn {

struct IndexEntry {
  std::string image_id;
  std::string class_label;
  MultiLabelSet multi_labels;
  RegionFeatureSet recnn;            // per-region pooled descriptors
  std::vector<float> recnn_plus;     // whole-image pooled vector
  std::map<BaselineScheme, DescriptorVector> baselines;
};

struct IndexConfig {
  int connectivity = 8;                   // 4 or 8
  std::uint32_t min_region_px = 1;        // regions below this are dropped
  std::uint32_t multilabel_min_pixels = 1;
  std::uint32_t num_classes = 17;         // label-map vocabulary size
  DescriptorParams descriptor_params;
};

struct RetrievalIndex {
  std::uint32_t feature_dim = 0;
  IndexConfig config;  // build-time snapshot; not persisted in RIX1
  std::vector<IndexEntry> entries;  // sorted ascending by image_id

  const IndexEntry* find(const std::string& image_id) const;
};

// Full extraction pipeline per image: relu -> bilinear upsample to the
// label map's resolution -> local feature matrix -> connected components
// -> region max pool  -> global max pool, plus the four baseline
// descriptors from the raster image. Any per-image failure aborts with
// the offending image_id.
RetrievalIndex build_index(const std::vector<ManifestRecord>& manifest,
                           const IndexConfig& config = {});

// RIX1 container, little-endian: magic "RIX1", u32 version, u32 entry
// count, u32 feature_dim, then per entry: id and class as u16 length +
// UTF-8 bytes, u32 multi-label bitset, u32 region count, per region
// (u8 class_id, u32 pixel_count, feature_dim f32), feature_dim f32 for
// the pooled vector, then per baseline scheme (stats, color, lbp, glcm)
// a u8 presence flag and, when present, u32 length + f32 payload.
std::vector<std::uint8_t> encode_index(const RetrievalIndex& index);
RetrievalIndex decode_index(const std::vector<std::uint8_t>& bytes);

void save_index(const std::string& path, const RetrievalIndex& index);
RetrievalIndex load_index(const std::string& path);

}  // namespace recnn
