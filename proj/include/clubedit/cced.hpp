#ifndef CLUBEDIT_CCED_HPP
#define CLUBEDIT_CCED_HPP

#include <set>
#include <utility>
#include <vector>

#include "clubedit/graph.hpp"

namespace clubedit {

/// One row of the score table: a vertex and its square clustering
/// coefficient on the input graph.
struct ScoreEntry {
    VertexId vertex;
    Rational score;
};

/// Every vertex once, ordered by descending score, ties by ascending id.
std::vector<ScoreEntry> score_vertices(const Graph& g);

/// Grows a 2-club around `seed`: repeatedly scans the unclustered neighbors
/// of the current cluster in table order and admits the first one that keeps
/// the induced diameter at 2, until no candidate is admissible.
std::set<VertexId> grow_two_club(const Graph& g, const std::vector<ScoreEntry>& table,
                                 VertexId seed, const std::set<VertexId>& unclustered);

/// Edge-deletion-only clustering: seeds clusters in score order until every
/// vertex is clustered; the edit log holds one deletion per cut edge.
std::pair<Clustering, EditLog> run_2cced(const Graph& input);

}  // namespace clubedit

#endif
