#include "clubedit/cced.hpp"

#include <algorithm>
#include <map>

namespace clubedit {

std::vector<ScoreEntry> score_vertices(const Graph& g) {
    std::vector<ScoreEntry> table;
    table.reserve(g.num_vertices());
    for (VertexId v : g.vertices())
        table.push_back({v, g.square_coefficient_exact(v)});
    std::stable_sort(table.begin(), table.end(), [](const ScoreEntry& a, const ScoreEntry& b) {
        if (!rational_equal(a.score, b.score))
            return rational_less(b.score, a.score);
        return a.vertex < b.vertex;
    });
    return table;
}

namespace {

// Adding u cannot stretch existing induced distances, so only the pairs
// (u, w) need checking.
bool admissible(const Graph& g, const std::set<VertexId>& cluster, VertexId u) {
    for (VertexId w : cluster) {
        if (g.has_edge(u, w))
            continue;
        bool linked = false;
        for (VertexId x : g.neighbors(u)) {
            if (cluster.count(x) && g.has_edge(x, w)) {
                linked = true;
                break;
            }
        }
        if (!linked)
            return false;
    }
    return true;
}

}  // namespace

std::set<VertexId> grow_two_club(const Graph& g, const std::vector<ScoreEntry>& table,
                                 VertexId seed, const std::set<VertexId>& unclustered) {
    std::map<VertexId, std::size_t> rank;
    for (std::size_t i = 0; i < table.size(); ++i)
        rank[table[i].vertex] = i;

    std::set<VertexId> cluster{seed};
    for (;;) {
        // Candidates: unclustered neighbors of the cluster, in table order.
        // A 2-club of size >= 2 is connected, so non-neighbors never qualify.
        std::set<std::pair<std::size_t, VertexId>> candidates;
        for (VertexId c : cluster)
            for (VertexId nbr : g.neighbors(c))
                if (unclustered.count(nbr) && !cluster.count(nbr))
                    candidates.insert({rank.at(nbr), nbr});

        bool grew = false;
        for (const auto& [pos, u] : candidates) {
            if (admissible(g, cluster, u)) {
                cluster.insert(u);
                grew = true;
                break;
            }
        }
        if (!grew)
            break;
    }
    return cluster;
}

std::pair<Clustering, EditLog> run_2cced(const Graph& input) {
    auto table = score_vertices(input);

    std::set<VertexId> unclustered;
    for (VertexId v : input.vertices())
        unclustered.insert(v);

    Clustering result;
    std::map<VertexId, std::size_t> cluster_of;
    for (const auto& entry : table) {
        if (!unclustered.count(entry.vertex))
            continue;
        auto cluster = grow_two_club(input, table, entry.vertex, unclustered);
        std::set<VertexId> origins;
        for (VertexId m : cluster) {
            unclustered.erase(m);
            cluster_of[m] = result.clusters.size();
            origins.insert(input.origin(m));
        }
        result.clusters.push_back(std::move(cluster));
        result.origin_clusters.push_back(std::move(origins));
    }

    // Cut edges become deletions, applied to a working copy so the log is
    // validated as it is built.
    Graph work = input;
    work.clear_edit_log();
    for (VertexId u : input.vertices())
        for (VertexId v : input.neighbors(u))
            if (u < v && cluster_of.at(u) != cluster_of.at(v))
                work.delete_edge(u, v);

    return {std::move(result), work.edit_log()};
}

}  // namespace clubedit
