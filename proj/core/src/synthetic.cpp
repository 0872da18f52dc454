#include "recnn/synthetic.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "recnn/error.hpp"
#include "recnn/fmap.hpp"
#include "recnn/netpbm.hpp"
#include "recnn/prng.hpp"
#include "recnn/raster.hpp"

namespace recnn {
namespace {

constexpr std::uint8_t kPalette[17][3] = {
    {230, 25, 75},   {60, 180, 75},   {255, 225, 25},  {0, 130, 200},
    {245, 130, 48},  {145, 30, 180},  {70, 240, 240},  {240, 50, 230},
    {210, 245, 60},  {250, 190, 190}, {0, 128, 128},   {230, 190, 255},
    {170, 110, 40},  {255, 250, 200}, {128, 0, 0},     {170, 255, 195},
    {128, 128, 0}};

std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint32_t i = 1; i <= k; ++i)
    result = result * (n - k + i) / i;
  return result;
}

// Largest subset size in {3, 2, 1} that still yields enough distinct
// combinations for every composition.
std::uint32_t subset_size(std::uint32_t num_classes,
                          std::uint32_t num_compositions) {
  for (std::uint32_t t : {3u, 2u, 1u}) {
    if (num_classes >= t && binomial(num_classes, t) >= num_compositions)
      return t;
  }
  throw std::invalid_argument(
      "generate_dataset: more compositions than distinct class subsets");
}

void validate(const SynthConfig& cfg) {
  if (cfg.num_images == 0 || cfg.num_compositions == 0)
    throw std::invalid_argument("generate_dataset: empty configuration");
  if (cfg.num_images % cfg.num_compositions != 0)
    throw std::invalid_argument(
        "generate_dataset: num_images must be divisible by num_compositions");
  if (cfg.num_pixel_classes == 0 || cfg.num_pixel_classes > 17)
    throw std::invalid_argument(
        "generate_dataset: num_pixel_classes must be in [1,17]");
  if (cfg.channels < cfg.num_pixel_classes)
    throw std::invalid_argument(
        "generate_dataset: channels must be >= num_pixel_classes so class "
        "prototypes stay distinguishable");
  if (cfg.noise_sigma < 0.0)
    throw std::invalid_argument("generate_dataset: noise_sigma must be >= 0");
  if (cfg.height == 0 || cfg.width == 0)
    throw std::invalid_argument("generate_dataset: zero image size");
}

struct Rect {
  std::uint32_t row0, row1, col0, col1;  // half-open
};

// One rectangle per foreground class, each strictly inside its own
// vertical strip so rectangles touch neither each other nor the border
// and the background stays a single connected region.
std::vector<Rect> layout_rects(std::uint32_t height, std::uint32_t width,
                               std::uint32_t num_fg) {
  std::vector<Rect> rects;
  if (num_fg == 0) return rects;
  const std::uint32_t strip = width / num_fg;
  const std::uint32_t margin_c = std::max(1u, strip / 4);
  const std::uint32_t margin_r = std::max(1u, height / 4);
  if (strip <= 2 * margin_c || height <= 2 * margin_r)
    throw std::invalid_argument(
        "generate_dataset: image too small for the composition layout");
  for (std::uint32_t f = 0; f < num_fg; ++f) {
    rects.push_back({margin_r, height - margin_r, f * strip + margin_c,
                     (f + 1) * strip - margin_c});
  }
  return rects;
}

}  // namespace

std::vector<std::uint8_t> composition_classes(const SynthConfig& cfg,
                                              std::uint32_t comp) {
  const std::uint32_t P = cfg.num_pixel_classes;
  const std::uint32_t t = subset_size(P, cfg.num_compositions);

  // Lexicographic unranking of the comp-th t-combination of {0..P-1}.
  std::vector<std::uint8_t> classes;
  std::uint64_t rank = comp;
  std::uint32_t next = 0;
  for (std::uint32_t i = 0; i < t; ++i) {
    for (std::uint32_t v = next;; ++v) {
      const std::uint64_t block = binomial(P - 1 - v, t - 1 - i);
      if (rank < block) {
        classes.push_back(static_cast<std::uint8_t>(v));
        next = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return classes;
}

std::string generate_dataset(const SynthConfig& cfg,
                             const std::string& out_dir) {
  validate(cfg);
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  // Per-composition layouts, shared by all images of the composition.
  std::vector<std::vector<std::uint8_t>> comp_classes(cfg.num_compositions);
  for (std::uint32_t k = 0; k < cfg.num_compositions; ++k)
    comp_classes[k] = composition_classes(cfg, k);
  const std::vector<Rect> rects = layout_rects(
      cfg.height, cfg.width,
      static_cast<std::uint32_t>(comp_classes[0].size()) - 1);

  const std::string manifest_path =
      (fs::path(out_dir) / "manifest.jsonl").string();
  std::ofstream manifest(manifest_path, std::ios::trunc);
  if (!manifest)
    throw DataError("cannot open manifest for writing: " + manifest_path);

  const std::size_t pixels =
      static_cast<std::size_t>(cfg.height) * cfg.width;
  LabelMap labels;
  labels.num_classes = cfg.num_pixel_classes;
  labels.height = cfg.height;
  labels.width = cfg.width;
  RasterImage image;
  image.height = cfg.height;
  image.width = cfg.width;
  FeatureMap fmap;
  fmap.height = cfg.height;
  fmap.width = cfg.width;
  fmap.channels = cfg.channels;

  for (std::uint32_t i = 0; i < cfg.num_images; ++i) {
    const std::uint32_t comp = i % cfg.num_compositions;
    const std::vector<std::uint8_t>& classes = comp_classes[comp];

    labels.labels.assign(pixels, classes[0]);
    for (std::size_t j = 0; j + 1 < classes.size(); ++j) {
      const Rect& rc = rects[j];
      for (std::uint32_t r = rc.row0; r < rc.row1; ++r)
        for (std::uint32_t c = rc.col0; c < rc.col1; ++c)
          labels.at(r, c) = classes[j + 1];
    }

    image.pixels.resize(pixels * 3);
    for (std::size_t p = 0; p < pixels; ++p) {
      const std::uint8_t* rgb = kPalette[labels.labels[p]];
      image.pixels[p * 3] = rgb[0];
      image.pixels[p * 3 + 1] = rgb[1];
      image.pixels[p * 3 + 2] = rgb[2];
    }

    fmap.values.resize(pixels * cfg.channels);
    SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(i));
    for (std::size_t p = 0; p < pixels; ++p) {
      const std::uint8_t cls = labels.labels[p];
      for (std::uint32_t ch = 0; ch < cfg.channels; ++ch) {
        double v = (ch == cls) ? 1.0 : 0.0;
        if (cfg.noise_sigma > 0.0)
          v += cfg.noise_sigma * rng.next_gaussian();
        fmap.values[p * cfg.channels + ch] = static_cast<float>(v);
      }
    }

    char id[16];
    std::snprintf(id, sizeof(id), "img%06u", i);
    char cls_label[16];
    std::snprintf(cls_label, sizeof(cls_label), "comp%03u", comp);

    const std::string stem(id);
    write_ppm_file((fs::path(out_dir) / (stem + ".ppm")).string(), image);
    write_pgm_file((fs::path(out_dir) / (stem + ".pgm")).string(), labels);
    write_fmap_file((fs::path(out_dir) / (stem + ".fmap")).string(), fmap);

    manifest << "{\"id\":\"" << stem << "\",\"class\":\"" << cls_label
             << "\",\"image\":\"" << stem << ".ppm\",\"labels\":\"" << stem
             << ".pgm\",\"features\":\"" << stem << ".fmap\"}\n";
  }
  manifest.close();
  if (!manifest) throw DataError("write failed: " + manifest_path);
  return manifest_path;
}

}  // namespace recnn
