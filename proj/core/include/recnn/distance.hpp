#pragma once

#include <span>

#include "recnn/region_features.hpp"

namespace recnn {

enum class Norm { L1, L2 };

// L1 = sum |a_i - b_i|; L2 = sqrt(sum (a_i - b_i)^2). Equal sizes required.
double vector_distance(std::span<const float> a, std::span<const float> b,
                       Norm norm);

// Asymmetric set distance: mean over query regions of the minimum L2
// distance to any archive region. Query is the first argument. The
// symmetrize flag averages both directions; it is off by default and
// nothing in the retrieval path turns it on.
double region_set_distance(const RegionFeatureSet& query,
                           const RegionFeatureSet& archive,
                           bool symmetrize = false);

}  // namespace recnn
