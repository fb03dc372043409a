#ifndef CLUBEDIT_GRAPH_HPP
#define CLUBEDIT_GRAPH_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace clubedit {

/// Vertex handle. Input vertices keep their file ids; split copies get fresh
/// ids above the input range. The origin map ties every copy back to the
/// input vertex it descends from.
using VertexId = int;

/// Exact nonnegative fraction (kept unreduced). Used wherever ties must be
/// broken deterministically: vertex scores and candidate-cluster costs.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
};

bool rational_less(const Rational& a, const Rational& b);
bool rational_equal(const Rational& a, const Rational& b);

enum class EditKind { DeleteEdge, SplitVertex };

/// One edit operation. Unit cost 1 per entry; isolating a vertex is recorded
/// as one DeleteEdge per removed edge.
struct EditOp {
    EditKind kind = EditKind::DeleteEdge;
    VertexId u = -1;                     // DeleteEdge endpoint / split vertex
    VertexId v = -1;                     // DeleteEdge endpoint
    std::vector<VertexId> internal;      // SplitVertex: neighbors u keeps
    VertexId copy = -1;                  // SplitVertex: id of the new copy (-1 = assign on apply)

    static EditOp delete_edge(VertexId a, VertexId b);
    static EditOp split_vertex(VertexId v, std::vector<VertexId> internal, VertexId copy);
};

/// Ordered, replayable record of edit operations. Its length is the
/// solution cost k.
class EditLog {
  public:
    void push(EditOp op) { ops_.push_back(std::move(op)); }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }
    const EditOp& operator[](std::size_t i) const { return ops_[i]; }
    auto begin() const { return ops_.begin(); }
    auto end() const { return ops_.end(); }
    void clear() { ops_.clear(); }

  private:
    std::vector<EditOp> ops_;
};

/// Simple undirected graph with origin tracking and an attached edit log.
/// delete_edge and split_vertex are the two logged edit operations;
/// add_vertex/add_edge/remove_vertex are construction plumbing and are not
/// logged.
class Graph {
  public:
    Graph() = default;

    bool has_vertex(VertexId v) const { return adjacency_.count(v) > 0; }
    bool has_edge(VertexId u, VertexId v) const;

    /// Registers v if absent; origin(v) = v.
    void add_vertex(VertexId v);
    /// Registers endpoints as needed. Self-loops and duplicates are dropped.
    void add_edge(VertexId u, VertexId v);
    /// Removes v and its incident edges. Not logged.
    void remove_vertex(VertexId v);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return edge_count_; }
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    const std::set<VertexId>& neighbors(VertexId v) const;
    /// All vertex ids in ascending order.
    std::vector<VertexId> vertices() const;
    VertexId origin(VertexId v) const;

    /// Removes the edge and appends a DeleteEdge entry to the log.
    void delete_edge(VertexId u, VertexId v);

    /// Splits v: v keeps exactly `internal`, a fresh copy receives the rest.
    /// Both parts must be nonempty. Appends a SplitVertex entry and returns
    /// the copy's id. origin(copy) = origin(v).
    VertexId split_vertex(VertexId v, const std::set<VertexId>& internal);

    /// Applies a recorded op (validating it), appending it to this graph's
    /// log. A SplitVertex op with copy = -1 gets a fresh id.
    void apply_edit(const EditOp& op);

    const EditLog& edit_log() const { return log_; }
    void clear_edit_log() { log_.clear(); }

    /// {u : dist(u, v) <= 2}, including v itself.
    std::set<VertexId> closed_two_neighborhood(VertexId v) const;

    /// True iff the subgraph induced by `members` has diameter <= 2
    /// (distances measured inside the induced subgraph). Singletons and the
    /// empty set qualify.
    bool is_two_club(const std::set<VertexId>& members) const;

    /// Fraction of potential squares (4-cycles) through v that are present,
    /// as an exact fraction; 0/0 is reported as 0.
    Rational square_coefficient_exact(VertexId v) const;
    double square_coefficient(VertexId v) const { return square_coefficient_exact(v).value(); }

    /// BFS hop counts from src; unreachable vertices are absent from the map.
    std::map<VertexId, int> bfs_distances(VertexId src) const;

    /// Connected components, each sorted ascending; components ordered by
    /// smallest member.
    std::vector<std::vector<VertexId>> connected_components() const;

    /// Subgraph induced by `members`, keeping ids and origins. Fresh log.
    Graph induced_subgraph(const std::vector<VertexId>& members) const;

    /// Vertex set, origin labels and edge set all equal.
    bool same_structure(const Graph& other) const;

  private:
    void require_vertex(VertexId v) const;
    void raw_delete_edge(VertexId u, VertexId v);
    VertexId raw_split_vertex(VertexId v, const std::vector<VertexId>& internal, VertexId copy);

    std::map<VertexId, std::set<VertexId>> adjacency_;
    std::map<VertexId, VertexId> origin_;
    std::size_t edge_count_ = 0;
    VertexId next_id_ = 0;
    EditLog log_;
};

/// Replay failure; op_index is the offending position in the log.
struct ReplayError : std::runtime_error {
    ReplayError(std::size_t index, const std::string& what)
        : std::runtime_error("op " + std::to_string(index) + ": " + what), op_index(index) {}
    std::size_t op_index;
};

/// Applies `log` to a copy of `original` (ignoring any log already attached
/// to it). Throws ReplayError on the first inapplicable op.
Graph replay(const Graph& original, const EditLog& log);

/// Disjoint clusters over working ids plus their projection to origin ids.
/// The origin view may overlap across clusters when splits occurred.
struct Clustering {
    std::vector<std::set<VertexId>> clusters;
    std::vector<std::set<VertexId>> origin_clusters;

    std::size_t size() const { return clusters.size(); }
};

}  // namespace clubedit

#endif
