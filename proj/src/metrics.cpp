#include "clubedit/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace clubedit {

namespace {

double f1(const std::set<VertexId>& a, const std::set<VertexId>& b) {
    if (a.empty() && b.empty())
        return 0.0;
    std::size_t common = 0;
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (VertexId v : small)
        common += large.count(v);
    return 2.0 * static_cast<double>(common) / static_cast<double>(a.size() + b.size());
}

double avg_best_match(const std::vector<std::set<VertexId>>& from,
                      const std::vector<std::set<VertexId>>& against) {
    double total = 0.0;
    for (const auto& a : from) {
        double best = 0.0;
        for (const auto& b : against)
            best = std::max(best, f1(a, b));
        total += best;
    }
    return total / static_cast<double>(from.size());
}

// Distances from every vertex that appears in some cluster, over the
// original graph. Throws when a cluster names a vertex the graph lacks.
std::map<VertexId, std::map<VertexId, int>> cluster_vertex_distances(
    const Graph& g, const std::vector<std::set<VertexId>>& clusters) {
    std::set<VertexId> sources;
    for (const auto& c : clusters)
        for (VertexId v : c) {
            if (!g.has_vertex(v))
                throw std::invalid_argument("cluster references unknown vertex " + std::to_string(v));
            sources.insert(v);
        }
    std::map<VertexId, std::map<VertexId, int>> dist;
    for (VertexId v : sources)
        dist[v] = g.bfs_distances(v);
    return dist;
}

}  // namespace

double overlap_f_score(const std::vector<std::set<VertexId>>& predicted,
                       const std::vector<std::set<VertexId>>& truth) {
    std::set<std::set<VertexId>> unique(predicted.begin(), predicted.end());
    std::vector<std::set<VertexId>> pred(unique.begin(), unique.end());
    if (pred.empty() || truth.empty())
        throw std::invalid_argument("overlap_f_score: empty clustering");
    return 0.5 * (avg_best_match(truth, pred) + avg_best_match(pred, truth));
}

DistanceSummary intra_cluster_distance(const Graph& original,
                                       const std::vector<std::set<VertexId>>& clusters) {
    auto dist = cluster_vertex_distances(original, clusters);
    DistanceSummary s;
    double total = 0.0;
    for (const auto& c : clusters) {
        for (auto it = c.begin(); it != c.end(); ++it) {
            const auto& from = dist.at(*it);
            for (auto jt = std::next(it); jt != c.end(); ++jt) {
                auto hit = from.find(*jt);
                if (hit == from.end()) {
                    ++s.excluded;
                } else {
                    total += hit->second;
                    ++s.pairs;
                }
            }
        }
    }
    if (s.pairs > 0)
        s.average = total / static_cast<double>(s.pairs);
    return s;
}

DistanceSummary inter_cluster_distance(const Graph& original,
                                       const std::vector<std::set<VertexId>>& clusters) {
    auto dist = cluster_vertex_distances(original, clusters);

    std::map<VertexId, std::set<std::size_t>> membership;
    for (std::size_t i = 0; i < clusters.size(); ++i)
        for (VertexId v : clusters[i])
            membership[v].insert(i);

    DistanceSummary s;
    double total = 0.0;
    for (auto it = membership.begin(); it != membership.end(); ++it) {
        const auto& from = dist.at(it->first);
        for (auto jt = std::next(it); jt != membership.end(); ++jt) {
            // A pair that co-occurs in any cluster is never an inter pair.
            const auto& a = it->second;
            const auto& b = jt->second;
            bool shared = std::any_of(a.begin(), a.end(),
                                      [&](std::size_t i) { return b.count(i) > 0; });
            if (shared)
                continue;
            auto hit = from.find(jt->first);
            if (hit == from.end()) {
                ++s.excluded;
            } else {
                total += hit->second;
                ++s.pairs;
            }
        }
    }
    if (s.pairs > 0)
        s.average = total / static_cast<double>(s.pairs);
    return s;
}

long long edit_cost(const EditLog& log) {
    return static_cast<long long>(log.size());
}

std::string format_report(const QualityReport& r) {
    std::string out;
    char buf[64];
    auto real_line = [&](const char* key, double v) {
        std::snprintf(buf, sizeof(buf), "%s %.6f\n", key, v);
        out += buf;
    };
    auto int_line = [&](const char* key, long long v) {
        std::snprintf(buf, sizeof(buf), "%s %lld\n", key, v);
        out += buf;
    };
    if (r.f_score)
        real_line("f_score", *r.f_score);
    if (r.intra_cd)
        real_line("intra_cd", *r.intra_cd);
    if (r.inter_cd)
        real_line("inter_cd", *r.inter_cd);
    int_line("excluded_pairs", r.excluded_pairs);
    if (r.cost)
        int_line("cost", *r.cost);
    int_line("num_clusters", r.num_clusters);
    if (r.runtime_seconds)
        real_line("runtime_seconds", *r.runtime_seconds);
    return out;
}

}  // namespace clubedit
