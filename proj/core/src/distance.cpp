#include "recnn/distance.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace recnn {

double vector_distance(std::span<const float> a, std::span<const float> b,
                       Norm norm) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector_distance: dimension mismatch, " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  double acc = 0.0;
  if (norm == Norm::L1) {
    for (std::size_t i = 0; i < a.size(); ++i)
      acc += std::abs(static_cast<double>(a[i]) - b[i]);
    return acc;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

namespace {

double directed_distance(const RegionFeatureSet& from,
                         const RegionFeatureSet& to) {
  double sum = 0.0;
  for (const RegionFeature& q : from.regions) {
    double best = std::numeric_limits<double>::infinity();
    for (const RegionFeature& r : to.regions) {
      double acc = 0.0;
      for (std::size_t k = 0; k < q.descriptor.size(); ++k) {
        const double d =
            static_cast<double>(q.descriptor[k]) - r.descriptor[k];
        acc += d * d;
      }
      best = std::min(best, acc);
    }
    sum += std::sqrt(best);
  }
  return sum / static_cast<double>(from.regions.size());
}

}  // namespace

double region_set_distance(const RegionFeatureSet& query,
                           const RegionFeatureSet& archive,
                           bool symmetrize) {
  if (query.empty() || archive.empty())
    throw std::invalid_argument("region_set_distance: empty region set");
  if (query.dim != archive.dim)
    throw std::invalid_argument(
        "region_set_distance: descriptor dimension mismatch");

  const double forward = directed_distance(query, archive);
  if (!symmetrize) return forward;
  return 0.5 * (forward + directed_distance(archive, query));
}

}  // namespace recnn
