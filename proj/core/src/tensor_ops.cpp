#include "recnn/tensor_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recnn {

FeatureMap relu(const FeatureMap& map) {
  FeatureMap out = map;
  // Canonicalizes -0.0 to +0.0 as well.
  for (float& v : out.values) v = (v > 0.0f) ? v : 0.0f;
  return out;
}

namespace {

struct Axis {
  std::vector<std::uint32_t> lo, hi;
  std::vector<double> frac;
};

Axis make_axis(std::uint32_t in, std::uint32_t out) {
  Axis axis;
  axis.lo.resize(out);
  axis.hi.resize(out);
  axis.frac.resize(out);
  const double scale = static_cast<double>(in) / static_cast<double>(out);
  for (std::uint32_t i = 0; i < out; ++i) {
    double src = (static_cast<double>(i) + 0.5) * scale - 0.5;
    src = std::clamp(src, 0.0, static_cast<double>(in - 1));
    const auto lo = static_cast<std::uint32_t>(src);
    axis.lo[i] = lo;
    axis.hi[i] = std::min(lo + 1, in - 1);
    axis.frac[i] = src - static_cast<double>(lo);
  }
  return axis;
}

}  // namespace

FeatureMap bilinear_upsample(const FeatureMap& map, std::uint32_t out_h,
                             std::uint32_t out_w) {
  if (out_h == 0 || out_w == 0)
    throw std::invalid_argument("bilinear_upsample: zero-sized target");
  if (out_h < map.height || out_w < map.width)
    throw std::invalid_argument(
        "bilinear_upsample: target smaller than source");

  FeatureMap out;
  out.height = out_h;
  out.width = out_w;
  out.channels = map.channels;
  out.values.resize(static_cast<std::size_t>(out_h) * out_w * map.channels);

  const Axis ys = make_axis(map.height, out_h);
  const Axis xs = make_axis(map.width, out_w);
  const std::uint32_t ch = map.channels;

  for (std::uint32_t r = 0; r < out_h; ++r) {
    const float* row0 = map.at(ys.lo[r], 0);
    const float* row1 = map.at(ys.hi[r], 0);
    const double fy = ys.frac[r];
    float* dst = out.at(r, 0);
    for (std::uint32_t c = 0; c < out_w; ++c) {
      const std::size_t x0 = static_cast<std::size_t>(xs.lo[c]) * ch;
      const std::size_t x1 = static_cast<std::size_t>(xs.hi[c]) * ch;
      const double fx = xs.frac[c];
      for (std::uint32_t k = 0; k < ch; ++k) {
        const double v00 = row0[x0 + k];
        const double v01 = row0[x1 + k];
        const double v10 = row1[x0 + k];
        const double v11 = row1[x1 + k];
        // Difference form: exact for constant neighborhoods.
        double v = v00 + fx * (v01 - v00) + fy * (v10 - v00) +
                   fx * fy * (v00 - v01 - v10 + v11);
        const double lo = std::min(std::min(v00, v01), std::min(v10, v11));
        const double hi = std::max(std::max(v00, v01), std::max(v10, v11));
        v = std::clamp(v, lo, hi);
        dst[static_cast<std::size_t>(c) * ch + k] = static_cast<float>(v);
      }
    }
  }
  return out;
}

LocalFeatureMatrix flatten_local_features(FeatureMap map) {
  LocalFeatureMatrix f;
  f.height = map.height;
  f.width = map.width;
  f.channels = map.channels;
  f.values = std::move(map.values);  // already row-major, channel-fastest
  return f;
}

}  // namespace recnn
