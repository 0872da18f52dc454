#pragma once

#include <string>
#include <vector>

#include "recnn/index.hpp"
#include "recnn/metrics.hpp"

namespace recnn {

// Retrieval schemes and their pinned distance measures: recnn uses the
// asymmetric region-set distance with the query as first argument;
// recnn+ and color use L1; stats, lbp and glcm use L2.
enum class Scheme { Recnn, RecnnPlus, Stats, Color, Lbp, Glcm };

Scheme scheme_from_string(const std::string& name);
std::string scheme_name(Scheme scheme);

// Distance between two entries under one scheme.
double entry_distance(const IndexEntry& query, const IndexEntry& other,
                      Scheme scheme);

// Exhaustive scan over the archive, ascending distance with ties broken
// by ascending image_id. The query itself is a candidate. With
// label_filter, entries sharing no pixel class with the query are
// excluded before ranking.
RankedList query_ranked(const RetrievalIndex& index,
                        const std::string& query_id, Scheme scheme,
                        bool label_filter = false);

// Every entry queries the archive once; relevance is an identical broad
// class_label (the query counts as relevant to itself). Per-query
// metrics are averaged into one report. Needs >= 2 entries and >= 2
// classes; single-member classes are allowed and simply contribute NG=1
// queries.
MetricsReport evaluate_scheme(const RetrievalIndex& index, Scheme scheme,
                              const std::vector<int>& k_list = {5, 10, 20,
                                                                50});

}  // namespace recnn
