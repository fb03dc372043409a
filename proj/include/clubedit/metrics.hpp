#ifndef CLUBEDIT_METRICS_HPP
#define CLUBEDIT_METRICS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clubedit/graph.hpp"

namespace clubedit {

/// Average shortest-path distance over a pair population, with unreachable
/// pairs excluded from the average but counted.
struct DistanceSummary {
    double average = 0.0;
    long long pairs = 0;     // reachable pairs behind `average`
    long long excluded = 0;  // unreachable pairs

    bool defined() const { return pairs > 0; }
};

/// Symmetric average-F1 between predicted clusters and ground-truth
/// communities: mean best-match F1 in each direction, averaged. Predicted
/// clusters are deduplicated first. Throws std::invalid_argument when either
/// side is empty.
double overlap_f_score(const std::vector<std::set<VertexId>>& predicted,
                       const std::vector<std::set<VertexId>>& truth);

/// Average distance (in `original`) over same-cluster vertex pairs, pooled
/// across clusters; a pair lying in several clusters contributes once per
/// cluster.
DistanceSummary intra_cluster_distance(const Graph& original,
                                       const std::vector<std::set<VertexId>>& clusters);

/// Average distance (in `original`) over vertex pairs that share no cluster,
/// each such pair counted once.
DistanceSummary inter_cluster_distance(const Graph& original,
                                       const std::vector<std::set<VertexId>>& clusters);

/// Solution cost: number of logged edit operations.
long long edit_cost(const EditLog& log);

/// Flat quality summary. Optional fields are omitted from the serialized
/// form when undefined (no ground truth, no pairs, no edit log, no timing).
struct QualityReport {
    std::optional<double> f_score;
    std::optional<double> intra_cd;
    std::optional<double> inter_cd;
    long long excluded_pairs = 0;
    std::optional<long long> cost;
    long long num_clusters = 0;
    std::optional<double> runtime_seconds;
};

/// One "key value" line per present field, fixed six-decimal formatting.
std::string format_report(const QualityReport& r);

}  // namespace clubedit

#endif
