#include "recnn/regions.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace recnn {
namespace {

class UnionFind {
public:
  std::uint32_t make_set() {
    parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
    return parent_.back();
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  // Union by smaller root id so the root is always the earliest
  // provisional label, which is the raster-first one.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

Connectivity connectivity_from_int(int value) {
  if (value == 4) return Connectivity::Four;
  if (value == 8) return Connectivity::Eight;
  throw std::invalid_argument("connectivity must be 4 or 8, got " +
                              std::to_string(value));
}

std::pair<RegionLabelMap, std::vector<Region>> connected_components(
    const LabelMap& map, Connectivity connectivity) {
  const std::uint32_t h = map.height;
  const std::uint32_t w = map.width;
  const bool diag = connectivity == Connectivity::Eight;

  constexpr std::uint32_t kNone = 0xFFFFFFFFu;
  std::vector<std::uint32_t> provisional(
      static_cast<std::size_t>(h) * w, kNone);
  UnionFind uf;

  // Pass 1: scan in raster order, unioning with already-visited
  // same-label neighbors (W, NW, N, NE for 8-connectivity; W, N for 4).
  for (std::uint32_t r = 0; r < h; ++r) {
    for (std::uint32_t c = 0; c < w; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * w + c;
      const std::uint8_t label = map.labels[idx];
      if (label == LabelMap::kIgnore) continue;

      std::uint32_t assigned = kNone;
      const auto consider = [&](std::uint32_t nr, std::uint32_t nc) {
        const std::size_t nidx = static_cast<std::size_t>(nr) * w + nc;
        if (map.labels[nidx] != label) return;
        if (assigned == kNone)
          assigned = provisional[nidx];
        else
          uf.unite(assigned, provisional[nidx]);
      };

      if (c > 0) consider(r, c - 1);
      if (r > 0) {
        if (diag && c > 0) consider(r - 1, c - 1);
        consider(r - 1, c);
        if (diag && c + 1 < w) consider(r - 1, c + 1);
      }
      if (assigned == kNone) assigned = uf.make_set();
      provisional[idx] = assigned;
    }
  }

  // Pass 2: number roots 1..n in raster order of first occurrence and
  // collect region stats.
  RegionLabelMap rmap;
  rmap.height = h;
  rmap.width = w;
  rmap.region_ids.assign(static_cast<std::size_t>(h) * w, 0);
  std::vector<Region> regions;
  std::vector<std::uint32_t> region_of_root;

  for (std::uint32_t r = 0; r < h; ++r) {
    for (std::uint32_t c = 0; c < w; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * w + c;
      if (provisional[idx] == kNone) continue;
      const std::uint32_t root = uf.find(provisional[idx]);
      if (root >= region_of_root.size())
        region_of_root.resize(root + 1, 0);
      std::uint32_t id = region_of_root[root];
      if (id == 0) {
        id = static_cast<std::uint32_t>(regions.size()) + 1;
        region_of_root[root] = id;
        Region region;
        region.id = id;
        region.class_id = map.labels[idx];
        region.pixel_count = 0;
        region.min_row = region.max_row = r;
        region.min_col = region.max_col = c;
        regions.push_back(region);
      }
      Region& region = regions[id - 1];
      region.pixel_count++;
      region.min_row = std::min(region.min_row, r);
      region.max_row = std::max(region.max_row, r);
      region.min_col = std::min(region.min_col, c);
      region.max_col = std::max(region.max_col, c);
      rmap.region_ids[idx] = id;
    }
  }
  return {std::move(rmap), std::move(regions)};
}

}  // namespace recnn
