#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recnn/raster.hpp"

namespace recnn {

enum class BaselineScheme : int { Stats = 0, Color = 1, Lbp = 2, Glcm = 3 };

constexpr int kNumBaselineSchemes = 4;

std::string baseline_scheme_name(BaselineScheme scheme);

struct DescriptorVector {
  BaselineScheme scheme = BaselineScheme::Stats;
  std::vector<float> values;
};

struct DescriptorParams {
  std::uint32_t color_bins = 32;   // per channel, bin = value / (256 / bins)
  std::uint32_t lbp_neighbors = 8; // P, circle of radius lbp_radius
  double lbp_radius = 1.0;
  std::uint32_t glcm_levels = 32;  // gray quantization for co-occurrence
};

// [mean_R, mean_G, mean_B, std_R, std_G, std_B] on values scaled to [0,1];
// population standard deviation.
DescriptorVector stats_descriptor(const RasterImage& img);

// Per-channel uniform histograms, each L1-normalized to 1, concatenated
// R||G||B. 32 bins per channel by default -> 96 values.
DescriptorVector color_histogram(const RasterImage& img,
                                 const DescriptorParams& params = {});

// Rotation-invariant uniform LBP (riu2), P neighbors on radius R with
// bilinear sampling, comparator neighbor >= center, histogram over
// interior pixels L1-normalized to 1. P+2 bins: 0..P ones for uniform
// patterns, last bin for non-uniform. Grayscale is
// round(0.299 R + 0.587 G + 0.114 B), half-up.
DescriptorVector lbp_descriptor(const RasterImage& img,
                                const DescriptorParams& params = {});

// Symmetric normalized co-occurrence matrices over offsets
// (0,1),(1,0),(1,1),(1,-1); per offset: contrast, correlation, energy,
// homogeneity -> 16 values, offset-major. An offset with no valid pixel
// pairs contributes the constant-image values (0, 1, 1, 1); zero-variance
// correlation is defined as 1.
DescriptorVector glcm_descriptor(const RasterImage& img,
                                 const DescriptorParams& params = {});

}  // namespace recnn
