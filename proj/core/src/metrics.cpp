#include "recnn/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace recnn {

double precision_at_k(const RankedList& ranked,
                      const std::set<std::string>& relevant, int k) {
  if (k < 1) throw std::invalid_argument("precision_at_k: k must be >= 1");
  std::size_t hits = 0;
  const std::size_t top = std::min(ranked.size(), static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < top; ++i)
    if (relevant.count(ranked[i].image_id)) ++hits;
  return static_cast<double>(hits) / static_cast<double>(k);
}

double average_precision(const RankedList& ranked,
                         const std::set<std::string>& relevant) {
  if (relevant.empty())
    throw std::invalid_argument("average_precision: empty relevant set");
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (relevant.count(ranked[i].image_id)) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  return sum / static_cast<double>(relevant.size());
}

double anmrr(const std::vector<RankedList>& rankings, const GroundTruth& gt,
             AnmrrKRule k_rule) {
  if (rankings.size() != gt.relevant.size())
    throw std::invalid_argument("anmrr: rankings/ground-truth size mismatch");
  if (rankings.empty()) throw std::invalid_argument("anmrr: no queries");

  const double gtm = static_cast<double>(gt.max_ng());
  double total = 0.0;
  for (std::size_t q = 0; q < rankings.size(); ++q) {
    const auto& relevant = gt.relevant[q];
    const double ng = static_cast<double>(relevant.size());
    if (relevant.empty())
      throw std::invalid_argument("anmrr: query with NG = 0");
    const double k_limit = k_rule == AnmrrKRule::Mpeg7
                               ? std::min(4.0 * ng, 2.0 * gtm)
                               : 2.0 * ng;

    double rank_sum = 0.0;
    std::size_t found = 0;
    for (std::size_t i = 0; i < rankings[q].size(); ++i) {
      if (!relevant.count(rankings[q][i].image_id)) continue;
      const double rank = static_cast<double>(i + 1);  // 1-based
      rank_sum += rank <= k_limit ? rank : 1.25 * k_limit;
      ++found;
    }
    // Relevant items missing from the list rank beyond K by definition.
    rank_sum += 1.25 * k_limit * (ng - static_cast<double>(found));

    const double avr = rank_sum / ng;
    const double mrr = avr - 0.5 - ng / 2.0;
    const double denom = 1.25 * k_limit - 0.5 - 0.5 * ng;
    // GTM >= NG forces K >= 2 NG, so denom >= 2 NG - 0.5 > 0.
    if (denom <= 0.0) throw std::logic_error("anmrr: degenerate denominator");
    total += mrr / denom;
  }
  return total / static_cast<double>(rankings.size());
}

std::array<PrPoint, 11> interpolated_pr(const std::vector<RankedList>& rankings,
                                        const GroundTruth& gt) {
  if (rankings.size() != gt.relevant.size())
    throw std::invalid_argument(
        "interpolated_pr: rankings/ground-truth size mismatch");
  if (rankings.empty()) throw std::invalid_argument("interpolated_pr: no queries");

  std::array<double, 11> sums{};
  for (std::size_t q = 0; q < rankings.size(); ++q) {
    const auto& relevant = gt.relevant[q];
    const std::size_t ng = relevant.size();
    if (ng == 0) throw std::invalid_argument("interpolated_pr: query with NG = 0");

    // Precision and hit count at every relevant hit.
    std::vector<std::pair<std::size_t, double>> hits;  // (num_hits, precision)
    std::size_t found = 0;
    for (std::size_t i = 0; i < rankings[q].size(); ++i) {
      if (!relevant.count(rankings[q][i].image_id)) continue;
      ++found;
      hits.emplace_back(found,
                        static_cast<double>(found) / static_cast<double>(i + 1));
    }

    // p(r) = max precision over hits with recall >= r; recall compared in
    // integers (10 * hits >= level * ng) to avoid float grid mismatches.
    double best = 0.0;
    std::size_t hi = hits.size();
    for (int level = 10; level >= 0; --level) {
      while (hi > 0 &&
             10 * hits[hi - 1].first >= static_cast<std::size_t>(level) * ng) {
        best = std::max(best, hits[hi - 1].second);
        --hi;
      }
      sums[level] += best;
    }
  }

  std::array<PrPoint, 11> curve{};
  for (int level = 0; level <= 10; ++level) {
    curve[level].recall = static_cast<double>(level) / 10.0;
    curve[level].precision = sums[level] / static_cast<double>(rankings.size());
  }
  return curve;
}

SegMetrics seg_metrics(const LabelMap& pred, const LabelMap& gt) {
  if (pred.height != gt.height || pred.width != gt.width)
    throw std::invalid_argument("seg_metrics: shape mismatch");

  // 256 x 256 confusion; gt ignore excluded, pred 255 counts as a class
  // that is simply never correct.
  std::vector<std::uint64_t> confusion(256 * 256, 0);
  for (std::size_t i = 0; i < gt.labels.size(); ++i) {
    if (gt.labels[i] == LabelMap::kIgnore) continue;
    confusion[static_cast<std::size_t>(gt.labels[i]) * 256 + pred.labels[i]]++;
  }

  std::uint64_t diag = 0, total = 0;
  double acc_sum = 0.0, iu_sum = 0.0;
  std::size_t present = 0;
  for (int c = 0; c < 256; ++c) {
    std::uint64_t t_i = 0, pred_i = 0;
    for (int j = 0; j < 256; ++j) {
      t_i += confusion[static_cast<std::size_t>(c) * 256 + j];
      pred_i += confusion[static_cast<std::size_t>(j) * 256 + c];
    }
    if (t_i == 0) continue;  // class absent from gt
    const std::uint64_t n_ii = confusion[static_cast<std::size_t>(c) * 257];
    diag += n_ii;
    total += t_i;
    ++present;
    acc_sum += static_cast<double>(n_ii) / static_cast<double>(t_i);
    iu_sum += static_cast<double>(n_ii) /
              static_cast<double>(t_i + pred_i - n_ii);
  }
  if (total == 0)
    throw std::invalid_argument("seg_metrics: no non-ignore gt pixels");

  SegMetrics out;
  out.pixel_acc = static_cast<double>(diag) / static_cast<double>(total);
  out.mean_acc = acc_sum / static_cast<double>(present);
  out.mean_iu = iu_sum / static_cast<double>(present);
  return out;
}

}  // namespace recnn
