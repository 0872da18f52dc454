#include "recnn/retrieval.hpp"

#include <algorithm>
#include <stdexcept>

#include "recnn/distance.hpp"

namespace recnn {

Scheme scheme_from_string(const std::string& name) {
  if (name == "recnn") return Scheme::Recnn;
  if (name == "recnn+") return Scheme::RecnnPlus;
  if (name == "stats") return Scheme::Stats;
  if (name == "color") return Scheme::Color;
  if (name == "lbp") return Scheme::Lbp;
  if (name == "glcm") return Scheme::Glcm;
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected recnn|recnn+|stats|color|lbp|glcm)");
}

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Recnn: return "recnn";
    case Scheme::RecnnPlus: return "recnn+";
    case Scheme::Stats: return "stats";
    case Scheme::Color: return "color";
    case Scheme::Lbp: return "lbp";
    case Scheme::Glcm: return "glcm";
  }
  throw std::invalid_argument("unknown scheme");
}

namespace {

const DescriptorVector& baseline_of(const IndexEntry& entry,
                                    BaselineScheme scheme) {
  const auto it = entry.baselines.find(scheme);
  if (it == entry.baselines.end())
    throw std::invalid_argument("entry '" + entry.image_id +
                                "' carries no " +
                                baseline_scheme_name(scheme) + " descriptor");
  return it->second;
}

}  // namespace

double entry_distance(const IndexEntry& query, const IndexEntry& other,
                      Scheme scheme) {
  switch (scheme) {
    case Scheme::Recnn:
      return region_set_distance(query.recnn, other.recnn);
    case Scheme::RecnnPlus:
      return vector_distance(query.recnn_plus, other.recnn_plus, Norm::L1);
    case Scheme::Color:
      return vector_distance(
          baseline_of(query, BaselineScheme::Color).values,
          baseline_of(other, BaselineScheme::Color).values, Norm::L1);
    case Scheme::Stats:
      return vector_distance(
          baseline_of(query, BaselineScheme::Stats).values,
          baseline_of(other, BaselineScheme::Stats).values, Norm::L2);
    case Scheme::Lbp:
      return vector_distance(baseline_of(query, BaselineScheme::Lbp).values,
                             baseline_of(other, BaselineScheme::Lbp).values,
                             Norm::L2);
    case Scheme::Glcm:
      return vector_distance(baseline_of(query, BaselineScheme::Glcm).values,
                             baseline_of(other, BaselineScheme::Glcm).values,
                             Norm::L2);
  }
  throw std::invalid_argument("unknown scheme");
}

RankedList query_ranked(const RetrievalIndex& index,
                        const std::string& query_id, Scheme scheme,
                        bool label_filter) {
  const IndexEntry* query = index.find(query_id);
  if (query == nullptr)
    throw std::invalid_argument("query id '" + query_id +
                                "' not present in index");

  RankedList ranked;
  ranked.reserve(index.entries.size());
  for (const IndexEntry& entry : index.entries) {
    if (label_filter && !entry.multi_labels.intersects(query->multi_labels))
      continue;
    ranked.push_back({entry.image_id, entry_distance(*query, entry, scheme)});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedItem& a, const RankedItem& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.image_id < b.image_id;
            });
  return ranked;
}

MetricsReport evaluate_scheme(const RetrievalIndex& index, Scheme scheme,
                              const std::vector<int>& k_list) {
  if (index.entries.size() < 2)
    throw std::invalid_argument("evaluate_scheme: need at least 2 entries");
  {
    bool two_classes = false;
    for (const IndexEntry& e : index.entries)
      if (e.class_label != index.entries.front().class_label) {
        two_classes = true;
        break;
      }
    if (!two_classes)
      throw std::invalid_argument("evaluate_scheme: need at least 2 classes");
  }

  std::vector<RankedList> rankings;
  GroundTruth gt;
  rankings.reserve(index.entries.size());
  gt.relevant.reserve(index.entries.size());
  for (const IndexEntry& query : index.entries) {
    rankings.push_back(query_ranked(index, query.image_id, scheme));
    std::set<std::string> relevant;
    for (const IndexEntry& other : index.entries)
      if (other.class_label == query.class_label)
        relevant.insert(other.image_id);
    gt.relevant.push_back(std::move(relevant));
  }

  MetricsReport report;
  report.scheme = scheme_name(scheme);
  report.anmrr = anmrr(rankings, gt);
  double ap_sum = 0.0;
  for (std::size_t q = 0; q < rankings.size(); ++q)
    ap_sum += average_precision(rankings[q], gt.relevant[q]);
  report.map = ap_sum / static_cast<double>(rankings.size());
  for (int k : k_list) {
    double p_sum = 0.0;
    for (std::size_t q = 0; q < rankings.size(); ++q)
      p_sum += precision_at_k(rankings[q], gt.relevant[q], k);
    report.p_at[k] = p_sum / static_cast<double>(rankings.size());
  }
  report.pr_curve = interpolated_pr(rankings, gt);
  return report;
}

}  // namespace recnn
