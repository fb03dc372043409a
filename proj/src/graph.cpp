#include "clubedit/graph.hpp"

#include <algorithm>
#include <deque>

namespace clubedit {

bool rational_less(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

bool rational_equal(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
}

EditOp EditOp::delete_edge(VertexId a, VertexId b) {
    EditOp op;
    op.kind = EditKind::DeleteEdge;
    op.u = a;
    op.v = b;
    return op;
}

EditOp EditOp::split_vertex(VertexId v, std::vector<VertexId> internal, VertexId copy) {
    EditOp op;
    op.kind = EditKind::SplitVertex;
    op.u = v;
    op.internal = std::move(internal);
    op.copy = copy;
    return op;
}

void Graph::require_vertex(VertexId v) const {
    if (!has_vertex(v))
        throw std::out_of_range("no such vertex: " + std::to_string(v));
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto it = adjacency_.find(u);
    return it != adjacency_.end() && it->second.count(v) > 0;
}

void Graph::add_vertex(VertexId v) {
    if (v < 0)
        throw std::invalid_argument("vertex ids must be nonnegative");
    if (adjacency_.emplace(v, std::set<VertexId>{}).second) {
        origin_[v] = v;
        next_id_ = std::max(next_id_, v + 1);
    }
}

void Graph::add_edge(VertexId u, VertexId v) {
    add_vertex(u);
    add_vertex(v);
    if (u == v)
        return;
    if (adjacency_[u].insert(v).second) {
        adjacency_[v].insert(u);
        ++edge_count_;
    }
}

void Graph::remove_vertex(VertexId v) {
    require_vertex(v);
    for (VertexId w : adjacency_[v]) {
        adjacency_[w].erase(v);
        --edge_count_;
    }
    adjacency_.erase(v);
    origin_.erase(v);
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end())
        throw std::out_of_range("no such vertex: " + std::to_string(v));
    return it->second;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(adjacency_.size());
    for (const auto& [v, _] : adjacency_)
        out.push_back(v);
    return out;
}

VertexId Graph::origin(VertexId v) const {
    auto it = origin_.find(v);
    if (it == origin_.end())
        throw std::out_of_range("no such vertex: " + std::to_string(v));
    return it->second;
}

void Graph::raw_delete_edge(VertexId u, VertexId v) {
    require_vertex(u);
    require_vertex(v);
    if (!has_edge(u, v))
        throw std::out_of_range("no such edge: " + std::to_string(u) + "-" + std::to_string(v));
    adjacency_[u].erase(v);
    adjacency_[v].erase(u);
    --edge_count_;
}

void Graph::delete_edge(VertexId u, VertexId v) {
    raw_delete_edge(u, v);
    log_.push(EditOp::delete_edge(u, v));
}

VertexId Graph::raw_split_vertex(VertexId v, const std::vector<VertexId>& internal, VertexId copy) {
    require_vertex(v);
    const auto& nv = adjacency_[v];
    std::set<VertexId> keep(internal.begin(), internal.end());
    if (keep.empty() || keep.size() >= nv.size())
        throw std::invalid_argument("invalid split of " + std::to_string(v) +
                                    ": both parts must be nonempty");
    for (VertexId w : keep)
        if (!nv.count(w))
            throw std::invalid_argument("invalid split of " + std::to_string(v) + ": " +
                                        std::to_string(w) + " is not a neighbor");

    if (copy < 0)
        copy = next_id_;
    else if (has_vertex(copy))
        throw std::invalid_argument("split copy id " + std::to_string(copy) + " already in use");

    std::set<VertexId> moved;
    for (VertexId w : nv)
        if (!keep.count(w))
            moved.insert(w);

    for (VertexId w : moved) {
        adjacency_[w].erase(v);
        adjacency_[w].insert(copy);
    }
    adjacency_[v] = keep;
    adjacency_[copy] = moved;
    origin_[copy] = origin_[v];
    next_id_ = std::max(next_id_, copy + 1);
    return copy;
}

VertexId Graph::split_vertex(VertexId v, const std::set<VertexId>& internal) {
    std::vector<VertexId> keep(internal.begin(), internal.end());
    VertexId copy = raw_split_vertex(v, keep, -1);
    log_.push(EditOp::split_vertex(v, std::move(keep), copy));
    return copy;
}

void Graph::apply_edit(const EditOp& op) {
    switch (op.kind) {
        case EditKind::DeleteEdge: {
            raw_delete_edge(op.u, op.v);
            log_.push(op);
            break;
        }
        case EditKind::SplitVertex: {
            VertexId copy = raw_split_vertex(op.u, op.internal, op.copy);
            EditOp recorded = op;
            recorded.copy = copy;
            log_.push(recorded);
            break;
        }
    }
}

std::set<VertexId> Graph::closed_two_neighborhood(VertexId v) const {
    require_vertex(v);
    std::set<VertexId> out{v};
    for (VertexId u : neighbors(v)) {
        out.insert(u);
        for (VertexId w : neighbors(u))
            out.insert(w);
    }
    return out;
}

bool Graph::is_two_club(const std::set<VertexId>& members) const {
    for (VertexId v : members)
        require_vertex(v);
    for (auto it = members.begin(); it != members.end(); ++it) {
        for (auto jt = std::next(it); jt != members.end(); ++jt) {
            VertexId u = *it, w = *jt;
            if (has_edge(u, w))
                continue;
            bool linked = false;
            for (VertexId x : neighbors(u)) {
                if (members.count(x) && has_edge(x, w)) {
                    linked = true;
                    break;
                }
            }
            if (!linked)
                return false;
        }
    }
    return true;
}

Rational Graph::square_coefficient_exact(VertexId v) const {
    const auto& nv = neighbors(v);
    long long squares = 0;
    long long potential = 0;
    for (auto it = nv.begin(); it != nv.end(); ++it) {
        for (auto jt = std::next(it); jt != nv.end(); ++jt) {
            VertexId u = *it, w = *jt;
            const auto& nu = neighbors(u);
            const auto& nw = neighbors(w);
            long long q = 0;  // common neighbors of u and w besides v
            const auto& small = nu.size() <= nw.size() ? nu : nw;
            const auto& large = nu.size() <= nw.size() ? nw : nu;
            for (VertexId x : small)
                if (x != v && large.count(x))
                    ++q;
            long long theta = nu.count(w) ? 1 : 0;
            long long a = (static_cast<long long>(nu.size()) - (1 + q + theta)) +
                          (static_cast<long long>(nw.size()) - (1 + q + theta));
            squares += q;
            potential += a + q;
        }
    }
    if (potential == 0)
        return {0, 1};
    return {squares, potential};
}

std::map<VertexId, int> Graph::bfs_distances(VertexId src) const {
    require_vertex(src);
    std::map<VertexId, int> dist;
    dist[src] = 0;
    std::deque<VertexId> queue{src};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        int d = dist[u];
        for (VertexId w : neighbors(u)) {
            if (!dist.count(w)) {
                dist[w] = d + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<VertexId>> Graph::connected_components() const {
    std::vector<std::vector<VertexId>> out;
    std::set<VertexId> seen;
    for (const auto& [v, _] : adjacency_) {
        if (seen.count(v))
            continue;
        std::vector<VertexId> comp;
        std::deque<VertexId> queue{v};
        seen.insert(v);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (VertexId w : neighbors(u)) {
                if (seen.insert(w).second)
                    queue.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph Graph::induced_subgraph(const std::vector<VertexId>& members) const {
    Graph out;
    out.next_id_ = next_id_;
    std::set<VertexId> keep(members.begin(), members.end());
    for (VertexId v : members) {
        require_vertex(v);
        out.add_vertex(v);
        for (VertexId w : neighbors(v))
            if (keep.count(w))
                out.add_edge(v, w);
    }
    for (VertexId v : members)
        out.origin_[v] = origin(v);
    return out;
}

bool Graph::same_structure(const Graph& other) const {
    return adjacency_ == other.adjacency_ && origin_ == other.origin_;
}

Graph replay(const Graph& original, const EditLog& log) {
    Graph g = original;
    g.clear_edit_log();
    for (std::size_t i = 0; i < log.size(); ++i) {
        try {
            g.apply_edit(log[i]);
        } catch (const std::exception& e) {
            throw ReplayError(i, e.what());
        }
    }
    return g;
}

}  // namespace clubedit
