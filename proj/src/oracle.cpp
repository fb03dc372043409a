#include "clubedit/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace clubedit {

namespace {

bool component_is_two_club(const Graph& g, const std::vector<VertexId>& comp) {
    return g.is_two_club(std::set<VertexId>(comp.begin(), comp.end()));
}

bool solved(const Graph& g) {
    for (const auto& comp : g.connected_components())
        if (!component_is_two_club(g, comp))
            return false;
    return true;
}

std::vector<std::pair<VertexId, VertexId>> edge_list(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u : g.vertices())
        for (VertexId v : g.neighbors(u))
            if (u < v)
                edges.push_back({u, v});
    return edges;
}

// Minimum deletions fixing one graph, or nullopt if above cap. Deleting
// every edge always works, so the answer is at most |E|.
std::optional<int> min_deletions(const Graph& g, int cap) {
    if (solved(g))
        return 0;
    auto edges = edge_list(g);
    int m = static_cast<int>(edges.size());
    for (int s = 1; s <= std::min(cap, m); ++s) {
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            Graph trial = g;
            trial.clear_edit_log();
            for (int i : idx)
                trial.delete_edge(edges[i].first, edges[i].second);
            if (solved(trial))
                return s;
            int pos = s - 1;
            while (pos >= 0 && idx[pos] == m - s + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[pos];
            for (int q = pos + 1; q < s; ++q)
                idx[q] = idx[q - 1] + 1;
        }
    }
    return std::nullopt;
}

// Label-invariant-ish fingerprint: vertices are relabeled by iterated degree
// refinement and the relabeled edge set becomes the key. Equal keys imply
// identical relabeled graphs, hence isomorphic ones, so memo hits are always
// sound; isomorphic graphs may still miss (different keys), costing time
// only.
using Key = std::vector<int>;

Key canonical_key(const Graph& g) {
    auto verts = g.vertices();
    int n = static_cast<int>(verts.size());
    std::map<VertexId, int> pos;
    for (int i = 0; i < n; ++i)
        pos[verts[i]] = i;

    std::vector<int> color(n);
    for (int i = 0; i < n; ++i)
        color[i] = static_cast<int>(g.degree(verts[i]));
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> nb;
            for (VertexId w : g.neighbors(verts[i]))
                nb.push_back(color[pos[w]]);
            std::sort(nb.begin(), nb.end());
            sig[i].push_back(color[i]);
            sig[i].insert(sig[i].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> classes = sig;
        std::sort(classes.begin(), classes.end());
        classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i)
            next[i] = static_cast<int>(
                std::lower_bound(classes.begin(), classes.end(), sig[i]) - classes.begin());
        if (next == color)
            break;
        color = next;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (color[a] != color[b])
            return color[a] < color[b];
        return a < b;
    });
    std::vector<int> newid(n);
    for (int r = 0; r < n; ++r)
        newid[order[r]] = r;

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (VertexId w : g.neighbors(verts[i])) {
            int j = pos[w];
            if (i < j)
                edges.push_back({std::min(newid[i], newid[j]), std::max(newid[i], newid[j])});
        }
    std::sort(edges.begin(), edges.end());

    Key key;
    key.push_back(n);
    for (const auto& [a, b] : edges) {
        key.push_back(a);
        key.push_back(b);
    }
    return key;
}

struct VsSearch {
    std::map<Key, int> failed_at;  // graph fingerprint -> highest depth shown insufficient

    bool reach(const Graph& g, int depth) {
        std::vector<VertexId> pending;
        std::size_t bad_components = 0;
        for (const auto& comp : g.connected_components()) {
            if (component_is_two_club(g, comp))
                continue;
            ++bad_components;
            pending.insert(pending.end(), comp.begin(), comp.end());
        }
        if (bad_components == 0)
            return true;
        if (static_cast<int>(bad_components) > depth)
            return false;

        // Already-solved components never need edits; drop them from both the
        // branching and the fingerprint.
        std::sort(pending.begin(), pending.end());
        Graph gg = g.induced_subgraph(pending);
        Key key = canonical_key(gg);
        auto it = failed_at.find(key);
        if (it != failed_at.end() && it->second >= depth)
            return false;

        for (const auto& [u, v] : edge_list(gg)) {
            Graph nxt = gg;
            nxt.clear_edit_log();
            nxt.delete_edge(u, v);
            if (reach(nxt, depth - 1))
                return true;
        }
        for (VertexId v : gg.vertices()) {
            std::vector<VertexId> nb(gg.neighbors(v).begin(), gg.neighbors(v).end());
            unsigned d = static_cast<unsigned>(nb.size());
            if (d < 2)
                continue;
            // Bipartitions of N(v): the part keeping nb[0] is `internal`,
            // excluding the full set. 2^(d-1)-1 genuine splits.
            for (unsigned mask = 0; mask + 1 < (1u << (d - 1)); ++mask) {
                std::set<VertexId> internal{nb[0]};
                for (unsigned j = 0; j + 1 < d; ++j)
                    if (mask & (1u << j))
                        internal.insert(nb[j + 1]);
                Graph nxt = gg;
                nxt.clear_edit_log();
                nxt.split_vertex(v, internal);
                if (reach(nxt, depth - 1))
                    return true;
            }
        }

        int& worst = failed_at[key];
        worst = std::max(worst, depth);
        return false;
    }
};

void check_size(const Graph& g, const OracleBudget& b) {
    if (static_cast<int>(g.num_vertices()) > b.max_vertices ||
        static_cast<int>(g.num_edges()) > b.max_edges)
        throw BudgetError("graph exceeds oracle limits (" + std::to_string(g.num_vertices()) +
                          " vertices, " + std::to_string(g.num_edges()) + " edges; allowed " +
                          std::to_string(b.max_vertices) + "/" + std::to_string(b.max_edges) + ")");
}

}  // namespace

std::optional<int> exact_2cced(const Graph& g, const OracleBudget& b) {
    check_size(g, b);
    int total = 0;
    // Deletions never merge components, so the optimum splits over them.
    for (const auto& comp : g.connected_components()) {
        auto mc = min_deletions(g.induced_subgraph(comp), b.kmax - total);
        if (!mc)
            return std::nullopt;
        total += *mc;
    }
    return total;
}

std::optional<int> exact_2ccedvs(const Graph& g, const OracleBudget& b) {
    check_size(g, b);
    for (VertexId v : g.vertices())
        if (static_cast<int>(g.degree(v)) > b.max_degree)
            throw BudgetError("degree " + std::to_string(g.degree(v)) + " at vertex " +
                              std::to_string(v) + " exceeds the split-enumeration limit " +
                              std::to_string(b.max_degree));

    int total = 0;
    VsSearch search;
    for (const auto& comp : g.connected_components()) {
        Graph cg = g.induced_subgraph(comp);
        if (solved(cg))
            continue;
        int cap = b.kmax - total;
        // Deletion-only optimum is an upper bound, and never cheaper than
        // the mixed optimum, so it caps the deepening.
        auto deletions_only = min_deletions(cg, cap);
        int limit = deletions_only ? std::min(cap, *deletions_only) : cap;
        std::optional<int> found;
        for (int d = 1; d <= limit; ++d) {
            if (search.reach(cg, d)) {
                found = d;
                break;
            }
        }
        if (!found)
            return std::nullopt;
        total += *found;
    }
    return total;
}

bool verify_solution(const Graph& original, const EditLog& log, const Clustering& c,
                     std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };

    Graph final_graph;
    try {
        final_graph = replay(original, log);
    } catch (const ReplayError& e) {
        return fail(std::string("replay failed at ") + e.what());
    }

    if (c.clusters.size() != c.origin_clusters.size())
        return fail("cluster list and origin view differ in length");

    std::map<VertexId, std::size_t> owner;
    for (std::size_t i = 0; i < c.clusters.size(); ++i) {
        if (c.clusters[i].empty())
            return fail("cluster " + std::to_string(i) + " is empty");
        std::set<VertexId> origins;
        for (VertexId v : c.clusters[i]) {
            if (!final_graph.has_vertex(v))
                return fail("cluster " + std::to_string(i) + " references vertex " +
                            std::to_string(v) + " absent from the edited graph");
            if (owner.count(v))
                return fail("vertex " + std::to_string(v) + " appears in two clusters");
            owner[v] = i;
            origins.insert(final_graph.origin(v));
        }
        if (origins != c.origin_clusters[i])
            return fail("origin view of cluster " + std::to_string(i) +
                        " does not match its members");
        if (!final_graph.is_two_club(c.clusters[i]))
            return fail("cluster " + std::to_string(i) + " is not a 2-club after editing");
    }

    for (VertexId v : final_graph.vertices()) {
        auto it = owner.find(v);
        if (it == owner.end())
            return fail("vertex " + std::to_string(v) + " is not covered by any cluster");
        for (VertexId w : final_graph.neighbors(v))
            if (owner.at(w) != it->second)
                return fail("edge {" + std::to_string(v) + "," + std::to_string(w) +
                            "} crosses clusters in the edited graph");
    }
    return true;
}

}  // namespace clubedit
