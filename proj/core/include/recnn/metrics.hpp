#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "recnn/raster.hpp"

namespace recnn {

struct RankedItem {
  std::string image_id;
  double distance = 0.0;
};

// Ascending distance, ties broken by ascending image_id.
using RankedList = std::vector<RankedItem>;

// Relevance sets aligned index-wise with a vector of per-query rankings.
// A query is always relevant to itself.
struct GroundTruth {
  std::vector<std::set<std::string>> relevant;

  std::size_t max_ng() const {
    std::size_t m = 0;
    for (const auto& s : relevant) m = std::max(m, s.size());
    return m;
  }
};

struct PrPoint {
  double recall = 0.0;
  double precision = 0.0;
};

struct MetricsReport {
  std::string scheme;
  double anmrr = 0.0;
  double map = 0.0;
  std::map<int, double> p_at;          // k -> mean precision at k
  std::array<PrPoint, 11> pr_curve{};  // recalls 0.0, 0.1, ..., 1.0
};

// |relevant among top k| / k; short lists keep denominator k.
double precision_at_k(const RankedList& ranked,
                      const std::set<std::string>& relevant, int k);

// AP = (1/NG) * sum over relevant hits of precision at the hit's rank.
double average_precision(const RankedList& ranked,
                         const std::set<std::string>& relevant);

// Cutoff rule for the ANMRR over-rank penalty. Mpeg7 is the convention
// every reported number uses; TwoNg exists for sensitivity checks.
enum class AnmrrKRule { Mpeg7, TwoNg };

// MPEG-7 normalized modified retrieval rank, averaged over queries.
// K(q) = min(4 NG(q), 2 GTM) under Mpeg7 (2 NG(q) under TwoNg); ranks
// beyond K count as 1.25 K; ranks are 1-based. 0 is perfect, 1 is worst.
double anmrr(const std::vector<RankedList>& rankings, const GroundTruth& gt,
             AnmrrKRule k_rule = AnmrrKRule::Mpeg7);

// Query-averaged interpolated precision at recalls 0.0, 0.1, ..., 1.0:
// p(r) = max precision at any recall >= r (0 when no such point exists).
std::array<PrPoint, 11> interpolated_pr(const std::vector<RankedList>& rankings,
                                        const GroundTruth& gt);

struct SegMetrics {
  double pixel_acc = 0.0;
  double mean_acc = 0.0;
  double mean_iu = 0.0;
};

// Confusion-matrix metrics over classes present in gt; gt ignore pixels
// (255) are excluded from every count.
SegMetrics seg_metrics(const LabelMap& pred, const LabelMap& gt);

}  // namespace recnn
