#include "recnn/index.hpp"

#include <algorithm>
#include <cstring>

#include "recnn/error.hpp"
#include "recnn/fmap.hpp"
#include "recnn/netpbm.hpp"
#include "recnn/tensor_ops.hpp"

namespace recnn {

const IndexEntry* RetrievalIndex::find(const std::string& image_id) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), image_id,
      [](const IndexEntry& e, const std::string& id) { return e.image_id < id; });
  if (it == entries.end() || it->image_id != image_id) return nullptr;
  return &*it;
}

namespace {

IndexEntry build_entry(const ManifestRecord& rec, const IndexConfig& config) {
  const RasterImage image = read_ppm_file(rec.image_path);
  const LabelMap labels = read_pgm_file(rec.label_path, config.num_classes);
  FeatureMap fmap = read_fmap_file(rec.feature_path);

  if (labels.height != image.height || labels.width != image.width)
    throw DataError("label map " + std::to_string(labels.width) + "x" +
                    std::to_string(labels.height) + " does not match image " +
                    std::to_string(image.width) + "x" +
                    std::to_string(image.height));

  fmap = relu(fmap);
  fmap = bilinear_upsample(fmap, labels.height, labels.width);
  const LocalFeatureMatrix local = flatten_local_features(std::move(fmap));

  const auto [rmap, regions] =
      connected_components(labels, connectivity_from_int(config.connectivity));

  IndexEntry entry;
  entry.image_id = rec.image_id;
  entry.class_label = rec.class_label;
  entry.multi_labels = derive_multilabels(labels, config.multilabel_min_pixels);
  entry.recnn = region_max_pool(local, rmap, regions, config.min_region_px);
  if (entry.recnn.empty())
    throw DataError("no region survives min_region_px=" +
                    std::to_string(config.min_region_px));
  entry.recnn_plus = global_max_pool(local);

  const DescriptorParams& dp = config.descriptor_params;
  entry.baselines[BaselineScheme::Stats] = stats_descriptor(image);
  entry.baselines[BaselineScheme::Color] = color_histogram(image, dp);
  entry.baselines[BaselineScheme::Lbp] = lbp_descriptor(image, dp);
  entry.baselines[BaselineScheme::Glcm] = glcm_descriptor(image, dp);
  return entry;
}

}  // namespace

RetrievalIndex build_index(const std::vector<ManifestRecord>& manifest,
                           const IndexConfig& config) {
  if (manifest.empty()) throw DataError("build_index: empty manifest");

  RetrievalIndex index;
  index.config = config;
  index.entries.reserve(manifest.size());
  for (const ManifestRecord& rec : manifest) {
    try {
      index.entries.push_back(build_entry(rec, config));
    } catch (const std::exception& e) {
      throw DataError("build_index: image '" + rec.image_id +
                      "': " + e.what());
    }
    const std::uint32_t dim = index.entries.back().recnn.dim;
    if (index.entries.size() == 1)
      index.feature_dim = dim;
    else if (dim != index.feature_dim)
      throw DataError("build_index: image '" + rec.image_id +
                      "' has feature dim " + std::to_string(dim) +
                      ", expected " + std::to_string(index.feature_dim));
  }
  std::sort(index.entries.begin(), index.entries.end(),
            [](const IndexEntry& a, const IndexEntry& b) {
              return a.image_id < b.image_id;
            });
  return index;
}

namespace {

constexpr char kMagic[4] = {'R', 'I', 'X', '1'};
constexpr std::uint32_t kVersion = 1;

class Writer {
public:
  std::vector<std::uint8_t> out;

  void u8(std::uint8_t v) { out.push_back(v); }
  void u16(std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
      out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f32(float v) {
    std::uint32_t u;
    std::memcpy(&u, &v, 4);
    u32(u);
  }
  void str(const std::string& s) {
    if (s.size() > 0xFFFF) throw DataError("rix: string longer than 65535");
    u16(static_cast<std::uint16_t>(s.size()));
    out.insert(out.end(), s.begin(), s.end());
  }
};

class Reader {
public:
  explicit Reader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  std::uint8_t u8() {
    need(1);
    return bytes_[pos_++];
  }
  std::uint16_t u16() {
    need(2);
    const std::uint16_t v = static_cast<std::uint16_t>(
        bytes_[pos_] | (bytes_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  float f32() {
    const std::uint32_t u = u32();
    float f;
    std::memcpy(&f, &u, 4);
    return f;
  }
  std::string str() {
    const std::uint16_t n = u16();
    need(n);
    std::string s(bytes_.begin() + static_cast<std::ptrdiff_t>(pos_),
                  bytes_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == bytes_.size(); }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

private:
  void need(std::size_t n) {
    if (pos_ + n > bytes_.size())
      throw FormatError("rix: truncated at byte " + std::to_string(pos_));
  }
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

std::uint32_t multilabel_bitset(const MultiLabelSet& labels) {
  std::uint32_t bits = 0;
  for (std::uint8_t c : labels.labels) {
    if (c >= 32)
      throw DataError("rix: multi-label class id " + std::to_string(c) +
                      " does not fit the 32-bit label set");
    bits |= 1u << c;
  }
  return bits;
}

constexpr BaselineScheme kSchemeOrder[kNumBaselineSchemes] = {
    BaselineScheme::Stats, BaselineScheme::Color, BaselineScheme::Lbp,
    BaselineScheme::Glcm};

}  // namespace

std::vector<std::uint8_t> encode_index(const RetrievalIndex& index) {
  Writer w;
  w.out.insert(w.out.end(), kMagic, kMagic + 4);
  w.u32(kVersion);
  w.u32(static_cast<std::uint32_t>(index.entries.size()));
  w.u32(index.feature_dim);

  for (const IndexEntry& entry : index.entries) {
    w.str(entry.image_id);
    w.str(entry.class_label);
    w.u32(multilabel_bitset(entry.multi_labels));
    w.u32(static_cast<std::uint32_t>(entry.recnn.size()));
    for (const RegionFeature& rf : entry.recnn.regions) {
      w.u8(rf.region.class_id);
      w.u32(rf.region.pixel_count);
      if (rf.descriptor.size() != index.feature_dim)
        throw DataError("rix: region descriptor dim mismatch in '" +
                        entry.image_id + "'");
      for (float v : rf.descriptor) w.f32(v);
    }
    if (entry.recnn_plus.size() != index.feature_dim)
      throw DataError("rix: pooled vector dim mismatch in '" +
                      entry.image_id + "'");
    for (float v : entry.recnn_plus) w.f32(v);

    for (BaselineScheme scheme : kSchemeOrder) {
      const auto it = entry.baselines.find(scheme);
      if (it == entry.baselines.end()) {
        w.u8(0);
        continue;
      }
      w.u8(1);
      w.u32(static_cast<std::uint32_t>(it->second.values.size()));
      for (float v : it->second.values) w.f32(v);
    }
  }
  return w.out;
}

RetrievalIndex decode_index(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw FormatError("rix: bad magic, expected \"RIX1\"");
  Reader r(bytes);
  r.u32();  // magic, already checked
  const std::uint32_t version = r.u32();
  if (version != kVersion)
    throw FormatError("rix: unsupported version " + std::to_string(version));

  RetrievalIndex index;
  const std::uint32_t count = r.u32();
  index.feature_dim = r.u32();

  // Length fields must be plausible against the stream size before they
  // drive any allocation.
  if (count > r.remaining() || index.feature_dim > r.remaining() / 4)
    throw FormatError("rix: header counts exceed the stream size");

  index.entries.resize(count);
  for (std::uint32_t e = 0; e < count; ++e) {
    IndexEntry& entry = index.entries[e];
    entry.image_id = r.str();
    entry.class_label = r.str();
    const std::uint32_t bits = r.u32();
    for (int c = 0; c < 32; ++c)
      if (bits & (1u << c))
        entry.multi_labels.labels.insert(static_cast<std::uint8_t>(c));

    const std::uint32_t num_regions = r.u32();
    if (num_regions == 0)
      throw FormatError("rix: entry '" + entry.image_id + "' has no regions");
    if (num_regions > r.remaining() / 5)  // >= 5 bytes per region
      throw FormatError("rix: region count exceeds the stream size");
    entry.recnn.dim = index.feature_dim;
    entry.recnn.regions.resize(num_regions);
    for (std::uint32_t j = 0; j < num_regions; ++j) {
      RegionFeature& rf = entry.recnn.regions[j];
      rf.region.id = j + 1;
      rf.region.class_id = r.u8();
      rf.region.pixel_count = r.u32();
      rf.descriptor.resize(index.feature_dim);
      for (float& v : rf.descriptor) v = r.f32();
    }
    entry.recnn_plus.resize(index.feature_dim);
    for (float& v : entry.recnn_plus) v = r.f32();

    for (BaselineScheme scheme : kSchemeOrder) {
      if (r.u8() == 0) continue;
      const std::uint32_t len = r.u32();
      if (len > r.remaining() / 4)
        throw FormatError("rix: descriptor length exceeds the stream size");
      DescriptorVector d;
      d.scheme = scheme;
      d.values.resize(len);
      for (float& v : d.values) v = r.f32();
      entry.baselines.emplace(scheme, std::move(d));
    }

    if (e > 0 && !(index.entries[e - 1].image_id < entry.image_id))
      throw FormatError("rix: entries not sorted by unique image_id ('" +
                        entry.image_id + "')");
  }
  if (!r.done())
    throw FormatError("rix: " + std::to_string(bytes.size() - r.pos()) +
                      " trailing bytes at byte " + std::to_string(r.pos()));
  return index;
}

void save_index(const std::string& path, const RetrievalIndex& index) {
  write_file_bytes(path, encode_index(index));
}

RetrievalIndex load_index(const std::string& path) {
  try {
    return decode_index(read_file_bytes(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace recnn
