#include "recnn/descriptors.hpp"

#include <cmath>
#include <stdexcept>

namespace recnn {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<int> luma_grayscale(const RasterImage& img) {
  std::vector<int> gray(static_cast<std::size_t>(img.height) * img.width);
  for (std::size_t i = 0; i < gray.size(); ++i) {
    const std::uint8_t* px = img.pixels.data() + i * 3;
    const double y = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
    gray[i] = static_cast<int>(std::floor(y + 0.5));  // half-up
  }
  return gray;
}

std::uint32_t bin_width_for(std::uint32_t bins, const char* what) {
  if (bins == 0 || bins > 256 || 256 % bins != 0)
    throw std::invalid_argument(std::string(what) +
                                " must divide 256 and be in [1,256]");
  return 256 / bins;
}

}  // namespace

std::string baseline_scheme_name(BaselineScheme scheme) {
  switch (scheme) {
    case BaselineScheme::Stats: return "stats";
    case BaselineScheme::Color: return "color";
    case BaselineScheme::Lbp: return "lbp";
    case BaselineScheme::Glcm: return "glcm";
  }
  throw std::invalid_argument("unknown baseline scheme");
}

DescriptorVector stats_descriptor(const RasterImage& img) {
  const std::size_t n = static_cast<std::size_t>(img.height) * img.width;
  double mean[3] = {0, 0, 0};
  for (std::size_t i = 0; i < n; ++i)
    for (int ch = 0; ch < 3; ++ch)
      mean[ch] += img.pixels[i * 3 + ch];
  for (double& m : mean) m /= (255.0 * static_cast<double>(n));

  double var[3] = {0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    for (int ch = 0; ch < 3; ++ch) {
      const double d = img.pixels[i * 3 + ch] / 255.0 - mean[ch];
      var[ch] += d * d;
    }
  }

  DescriptorVector out;
  out.scheme = BaselineScheme::Stats;
  out.values.resize(6);
  for (int ch = 0; ch < 3; ++ch) {
    out.values[ch] = static_cast<float>(mean[ch]);
    out.values[3 + ch] =
        static_cast<float>(std::sqrt(var[ch] / static_cast<double>(n)));
  }
  return out;
}

DescriptorVector color_histogram(const RasterImage& img,
                                 const DescriptorParams& params) {
  const std::uint32_t bins = params.color_bins;
  const std::uint32_t width = bin_width_for(bins, "color_bins");
  const std::size_t n = static_cast<std::size_t>(img.height) * img.width;

  std::vector<double> counts(static_cast<std::size_t>(bins) * 3, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (int ch = 0; ch < 3; ++ch)
      counts[static_cast<std::size_t>(ch) * bins +
             img.pixels[i * 3 + ch] / width] += 1.0;

  DescriptorVector out;
  out.scheme = BaselineScheme::Color;
  out.values.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    out.values[i] = static_cast<float>(counts[i] / static_cast<double>(n));
  return out;
}

DescriptorVector lbp_descriptor(const RasterImage& img,
                                const DescriptorParams& params) {
  const std::uint32_t P = params.lbp_neighbors;
  const double R = params.lbp_radius;
  if (P < 2 || R <= 0.0)
    throw std::invalid_argument("lbp: need >= 2 neighbors and radius > 0");
  const std::uint32_t margin = static_cast<std::uint32_t>(std::ceil(R));
  if (img.height < 2 * margin + 1 || img.width < 2 * margin + 1)
    throw std::invalid_argument("lbp: image smaller than " +
                                std::to_string(2 * margin + 1) + "x" +
                                std::to_string(2 * margin + 1));

  // Circle offsets, snapped to the grid where they land on it exactly.
  std::vector<double> dr(P), dc(P);
  for (std::uint32_t p = 0; p < P; ++p) {
    const double angle = 2.0 * kPi * static_cast<double>(p) / P;
    double row_off = -R * std::sin(angle);
    double col_off = R * std::cos(angle);
    if (std::abs(row_off - std::round(row_off)) < 1e-9)
      row_off = std::round(row_off);
    if (std::abs(col_off - std::round(col_off)) < 1e-9)
      col_off = std::round(col_off);
    dr[p] = row_off;
    dc[p] = col_off;
  }

  const std::vector<int> gray = luma_grayscale(img);
  const std::uint32_t w = img.width;
  const auto sample = [&](double r, double c) {
    const auto r0 = static_cast<std::uint32_t>(r);
    const auto c0 = static_cast<std::uint32_t>(c);
    const std::uint32_t r1 = std::min(r0 + 1, img.height - 1);
    const std::uint32_t c1 = std::min(c0 + 1, w - 1);
    const double fy = r - r0;
    const double fx = c - c0;
    const double v00 = gray[static_cast<std::size_t>(r0) * w + c0];
    const double v01 = gray[static_cast<std::size_t>(r0) * w + c1];
    const double v10 = gray[static_cast<std::size_t>(r1) * w + c0];
    const double v11 = gray[static_cast<std::size_t>(r1) * w + c1];
    return v00 + fx * (v01 - v00) + fy * (v10 - v00) +
           fx * fy * (v00 - v01 - v10 + v11);
  };

  std::vector<double> hist(P + 2, 0.0);
  double total = 0.0;
  for (std::uint32_t r = margin; r + margin < img.height; ++r) {
    for (std::uint32_t c = margin; c + margin < w; ++c) {
      const double center = gray[static_cast<std::size_t>(r) * w + c];
      std::uint32_t bits = 0;
      for (std::uint32_t p = 0; p < P; ++p) {
        const double v = sample(r + dr[p], c + dc[p]);
        if (v >= center) bits |= 1u << p;
      }
      std::uint32_t transitions = 0;
      std::uint32_t ones = 0;
      for (std::uint32_t p = 0; p < P; ++p) {
        const std::uint32_t b = (bits >> p) & 1u;
        const std::uint32_t prev = (bits >> ((p + P - 1) % P)) & 1u;
        transitions += b ^ prev;
        ones += b;
      }
      hist[transitions <= 2 ? ones : P + 1] += 1.0;
      total += 1.0;
    }
  }

  DescriptorVector out;
  out.scheme = BaselineScheme::Lbp;
  out.values.resize(hist.size());
  for (std::size_t i = 0; i < hist.size(); ++i)
    out.values[i] = static_cast<float>(hist[i] / total);
  return out;
}

DescriptorVector glcm_descriptor(const RasterImage& img,
                                 const DescriptorParams& params) {
  const std::uint32_t levels = params.glcm_levels;
  const std::uint32_t width = bin_width_for(levels, "glcm_levels");
  const std::vector<int> gray = luma_grayscale(img);

  std::vector<int> level(gray.size());
  for (std::size_t i = 0; i < gray.size(); ++i) level[i] = gray[i] / width;

  static constexpr int kOffsets[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};

  DescriptorVector out;
  out.scheme = BaselineScheme::Glcm;
  out.values.reserve(16);

  const int h = static_cast<int>(img.height);
  const int w = static_cast<int>(img.width);
  std::vector<double> cooc(static_cast<std::size_t>(levels) * levels);

  for (const auto& off : kOffsets) {
    std::fill(cooc.begin(), cooc.end(), 0.0);
    double total = 0.0;
    for (int r = 0; r < h; ++r) {
      const int r2 = r + off[0];
      if (r2 < 0 || r2 >= h) continue;
      for (int c = 0; c < w; ++c) {
        const int c2 = c + off[1];
        if (c2 < 0 || c2 >= w) continue;
        const int a = level[static_cast<std::size_t>(r) * w + c];
        const int b = level[static_cast<std::size_t>(r2) * w + c2];
        cooc[static_cast<std::size_t>(a) * levels + b] += 1.0;
        cooc[static_cast<std::size_t>(b) * levels + a] += 1.0;
        total += 2.0;
      }
    }

    if (total == 0.0) {
      // No valid pairs for this offset: constant-image convention.
      out.values.insert(out.values.end(), {0.0f, 1.0f, 1.0f, 1.0f});
      continue;
    }

    double contrast = 0.0, energy = 0.0, homogeneity = 0.0;
    double mu = 0.0;
    for (std::uint32_t i = 0; i < levels; ++i) {
      for (std::uint32_t j = 0; j < levels; ++j) {
        const double p = cooc[static_cast<std::size_t>(i) * levels + j] / total;
        if (p == 0.0) continue;
        const double d = static_cast<double>(i) - static_cast<double>(j);
        contrast += p * d * d;
        energy += p * p;
        homogeneity += p / (1.0 + std::abs(d));
        mu += p * static_cast<double>(i);
      }
    }
    double variance = 0.0;
    double corr_num = 0.0;
    for (std::uint32_t i = 0; i < levels; ++i) {
      for (std::uint32_t j = 0; j < levels; ++j) {
        const double p = cooc[static_cast<std::size_t>(i) * levels + j] / total;
        if (p == 0.0) continue;
        variance += p * (i - mu) * (i - mu);
        corr_num += p * (i - mu) * (j - mu);
      }
    }
    const double correlation = variance == 0.0 ? 1.0 : corr_num / variance;

    out.values.push_back(static_cast<float>(contrast));
    out.values.push_back(static_cast<float>(correlation));
    out.values.push_back(static_cast<float>(energy));
    out.values.push_back(static_cast<float>(homogeneity));
  }
  return out;
}

}  // namespace recnn
