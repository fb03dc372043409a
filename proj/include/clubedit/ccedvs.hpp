#ifndef CLUBEDIT_CCEDVS_HPP
#define CLUBEDIT_CCEDVS_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "clubedit/graph.hpp"

namespace clubedit {

/// Random-walk graph on the closed 2-neighborhood of a seed. Induced edges
/// become two-way arcs of weight 1; a vertex at distance 2 with k neighbors
/// outside the neighborhood gets a return arc to the seed of weight k.
/// `transition` is the row-stochastic matrix over `nodes` (zero rows become
/// identity rows).
struct WalkGraph {
    VertexId seed = -1;
    std::vector<VertexId> nodes;  // ascending
    std::vector<std::vector<double>> transition;

    std::size_t index_of(VertexId v) const;
};

WalkGraph build_walk_graph(const Graph& g, VertexId v);

/// Distribution of the walk started at the seed after `steps` transitions.
std::map<VertexId, double> transition_distribution(const WalkGraph& w, int steps = 8);

/// Neighborhood ordered by decreasing probability, ties by ascending id.
std::vector<VertexId> rank_neighborhood(const std::map<VertexId, double>& probability);

enum class MemberAction {
    Keep,       // no outside neighbors
    DeleteOne,  // exactly one outside neighbor: delete that edge
    Split,      // several outside neighbors: split, keeping members in one copy
    Isolate     // singleton cluster: delete every incident edge
};

/// A 2-club candidate with its normalized edit cost and the per-member plan.
struct CandidateCluster {
    std::set<VertexId> members;
    Rational cost;
    std::map<VertexId, MemberAction> actions;
};

/// Cost of finalizing `members` as one cluster: per member, 0 if it has no
/// neighbors outside, else 1 (one deletion or one split), summed and divided
/// by the member count. A singleton with k outside neighbors costs k (it is
/// isolated edge by edge; a split that strips every neighbor is illegal).
/// `members` must be a 2-club of g.
CandidateCluster cluster_cost(const Graph& g, const std::set<VertexId>& members);

/// Minimum-cost 2-club prefix of the ranked list; ties go to the longer
/// prefix. A length-1 prefix is always a 2-club, so a candidate exists.
CandidateCluster best_prefix(const Graph& g, const std::vector<VertexId>& ranked);

/// Applies the candidate's planned edits to g, appends the members (and
/// their origin projection) to `out`, and removes them from g. Split copies
/// stay behind unassigned.
void process_cluster(Graph& g, const CandidateCluster& c, Clustering& out);

/// Edge deletion + vertex splitting heuristic. Repeatedly seeds walks from
/// an unassigned minimum-degree and maximum-degree vertex (ties by id),
/// keeps the cheaper best prefix (ties favor the min-degree seed), and
/// finalizes it, until every vertex is assigned.
std::pair<Clustering, EditLog> run_2ccedvs(const Graph& input);

}  // namespace clubedit

#endif
