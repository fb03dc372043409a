#include "clubedit/ccedvs.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace clubedit {

std::size_t WalkGraph::index_of(VertexId v) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
    if (it == nodes.end() || *it != v)
        throw std::out_of_range("vertex not in walk graph");
    return static_cast<std::size_t>(it - nodes.begin());
}

WalkGraph build_walk_graph(const Graph& g, VertexId v) {
    WalkGraph w;
    w.seed = v;
    auto hood = g.closed_two_neighborhood(v);
    w.nodes.assign(hood.begin(), hood.end());

    std::size_t n = w.nodes.size();
    std::vector<std::vector<double>> weight(n, std::vector<double>(n, 0.0));
    std::size_t seed_idx = w.index_of(v);
    for (std::size_t i = 0; i < n; ++i) {
        VertexId u = w.nodes[i];
        std::size_t outside = 0;
        for (VertexId nbr : g.neighbors(u)) {
            if (hood.count(nbr))
                weight[i][w.index_of(nbr)] = 1.0;  // induced edge, both directions filled
            else
                ++outside;
        }
        // Only vertices at distance exactly 2 can have neighbors outside the
        // closed 2-neighborhood; they feed back into the seed.
        if (outside > 0)
            weight[i][seed_idx] += static_cast<double>(outside);
    }

    w.transition.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            row_sum += weight[i][j];
        if (row_sum == 0.0) {
            w.transition[i][i] = 1.0;
            continue;
        }
        for (std::size_t j = 0; j < n; ++j)
            w.transition[i][j] = weight[i][j] / row_sum;
    }
    return w;
}

std::map<VertexId, double> transition_distribution(const WalkGraph& w, int steps) {
    std::size_t n = w.nodes.size();
    std::vector<double> cur(n, 0.0);
    cur[w.index_of(w.seed)] = 1.0;
    std::vector<double> next(n, 0.0);
    for (int s = 0; s < steps; ++s) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (cur[i] == 0.0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                next[j] += cur[i] * w.transition[i][j];
        }
        cur.swap(next);
    }
    std::map<VertexId, double> out;
    for (std::size_t i = 0; i < n; ++i)
        out[w.nodes[i]] = cur[i];
    return out;
}

std::vector<VertexId> rank_neighborhood(const std::map<VertexId, double>& probability) {
    std::vector<VertexId> order;
    order.reserve(probability.size());
    for (const auto& [v, p] : probability)
        order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        double pa = probability.at(a);
        double pb = probability.at(b);
        if (pa != pb)
            return pa > pb;
        return a < b;
    });
    return order;
}

CandidateCluster cluster_cost(const Graph& g, const std::set<VertexId>& members) {
    if (members.empty())
        throw std::invalid_argument("cluster_cost: empty member set");
    if (!g.is_two_club(members))
        throw std::invalid_argument("cluster_cost: members are not a 2-club");

    CandidateCluster c;
    c.members = members;
    if (members.size() == 1) {
        VertexId v = *members.begin();
        long long ext = static_cast<long long>(g.degree(v));
        c.actions[v] = ext == 0 ? MemberAction::Keep : MemberAction::Isolate;
        c.cost = {ext, 1};
        return c;
    }

    long long units = 0;
    for (VertexId x : members) {
        std::size_t ext = 0;
        for (VertexId nbr : g.neighbors(x))
            if (!members.count(nbr))
                ++ext;
        if (ext == 0) {
            c.actions[x] = MemberAction::Keep;
        } else if (ext == 1) {
            c.actions[x] = MemberAction::DeleteOne;
            units += 1;
        } else {
            c.actions[x] = MemberAction::Split;
            units += 1;
        }
    }
    c.cost = {units, static_cast<long long>(members.size())};
    return c;
}

namespace {

// Incremental 2-club bookkeeping while a prefix grows. A pair is broken when
// its endpoints are non-adjacent and share no common neighbor inside the
// prefix; growth can only fix pairs, never break fixed ones.
struct PrefixState {
    const Graph& g;
    std::set<VertexId> members;
    std::set<std::pair<VertexId, VertexId>> broken;
    std::map<VertexId, std::size_t> ext;
    long long units = 0;  // members with ext > 0

    explicit PrefixState(const Graph& graph) : g(graph) {}

    void add(VertexId u) {
        for (auto it = broken.begin(); it != broken.end();) {
            if (g.has_edge(u, it->first) && g.has_edge(u, it->second))
                it = broken.erase(it);
            else
                ++it;
        }
        std::size_t u_ext = 0;
        for (VertexId nbr : g.neighbors(u)) {
            if (members.count(nbr)) {
                auto& nbr_ext = ext[nbr];
                if (--nbr_ext == 0)
                    --units;
            } else {
                ++u_ext;
            }
        }
        for (VertexId w : members) {
            if (g.has_edge(u, w))
                continue;
            bool linked = false;
            for (VertexId z : g.neighbors(u)) {
                if (members.count(z) && g.has_edge(z, w)) {
                    linked = true;
                    break;
                }
            }
            if (!linked)
                broken.insert({std::min(u, w), std::max(u, w)});
        }
        members.insert(u);
        ext[u] = u_ext;
        if (u_ext > 0)
            ++units;
    }

    bool two_club() const { return broken.empty(); }

    Rational cost() const {
        if (members.size() == 1)
            return {static_cast<long long>(ext.begin()->second), 1};
        return {units, static_cast<long long>(members.size())};
    }
};

}  // namespace

CandidateCluster best_prefix(const Graph& g, const std::vector<VertexId>& ranked) {
    if (ranked.empty())
        throw std::invalid_argument("best_prefix: empty ranking");

    PrefixState state(g);
    std::size_t best_len = 0;
    Rational best_cost;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        state.add(ranked[i]);
        if (!state.two_club())
            continue;
        Rational cost = state.cost();
        // <= keeps the later (larger) prefix on ties.
        if (best_len == 0 || !rational_less(best_cost, cost)) {
            best_len = i + 1;
            best_cost = cost;
        }
    }
    assert(best_len > 0);  // a singleton prefix is always a 2-club

    std::set<VertexId> members(ranked.begin(), ranked.begin() + best_len);
    return cluster_cost(g, members);
}

void process_cluster(Graph& g, const CandidateCluster& c, Clustering& out) {
    // Planned edits touch only member-to-outside edges, so applying them
    // member by member cannot invalidate a later member's plan.
    for (const auto& [x, action] : c.actions) {
        switch (action) {
            case MemberAction::Keep:
                break;
            case MemberAction::DeleteOne: {
                VertexId outside = -1;
                for (VertexId nbr : g.neighbors(x)) {
                    if (!c.members.count(nbr)) {
                        outside = nbr;
                        break;
                    }
                }
                g.delete_edge(x, outside);
                break;
            }
            case MemberAction::Split: {
                std::set<VertexId> internal;
                for (VertexId nbr : g.neighbors(x))
                    if (c.members.count(nbr))
                        internal.insert(nbr);
                g.split_vertex(x, internal);
                break;
            }
            case MemberAction::Isolate: {
                std::vector<VertexId> nbrs(g.neighbors(x).begin(), g.neighbors(x).end());
                for (VertexId nbr : nbrs)
                    g.delete_edge(x, nbr);
                break;
            }
        }
    }

    std::set<VertexId> origins;
    for (VertexId x : c.members)
        origins.insert(g.origin(x));
    out.clusters.push_back(c.members);
    out.origin_clusters.push_back(std::move(origins));

    for (VertexId x : c.members)
        g.remove_vertex(x);
}

namespace {

CandidateCluster candidate_for_seed(const Graph& g, VertexId seed) {
    WalkGraph w = build_walk_graph(g, seed);
    auto probability = transition_distribution(w);
    auto ranked = rank_neighborhood(probability);
    return best_prefix(g, ranked);
}

}  // namespace

std::pair<Clustering, EditLog> run_2ccedvs(const Graph& input) {
    Graph work = input;
    work.clear_edit_log();

    Clustering result;
    while (work.num_vertices() > 0) {
        VertexId min_seed = -1;
        VertexId max_seed = -1;
        std::size_t min_deg = 0;
        std::size_t max_deg = 0;
        for (VertexId v : work.vertices()) {
            std::size_t d = work.degree(v);
            if (min_seed == -1 || d < min_deg) {
                min_seed = v;
                min_deg = d;
            }
            if (max_seed == -1 || d > max_deg) {
                max_seed = v;
                max_deg = d;
            }
        }

        CandidateCluster chosen = candidate_for_seed(work, min_seed);
        if (max_seed != min_seed) {
            CandidateCluster other = candidate_for_seed(work, max_seed);
            if (rational_less(other.cost, chosen.cost))
                chosen = std::move(other);
        }
        process_cluster(work, chosen, result);
    }
    return {std::move(result), work.edit_log()};
}

}  // namespace clubedit
