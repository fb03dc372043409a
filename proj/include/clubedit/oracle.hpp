#ifndef CLUBEDIT_ORACLE_HPP
#define CLUBEDIT_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "clubedit/graph.hpp"

namespace clubedit {

/// Size guards for the exhaustive solvers. kmax bounds the answer; the
/// remaining limits bound the search space itself and trigger refusal.
struct OracleBudget {
    int kmax = 8;
    int max_vertices = 12;
    int max_edges = 20;
    int max_degree = 10;  // splitting enumerates 2^(deg-1) bipartitions
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimum number of edge deletions turning g into a disjoint union of
/// 2-clubs, or nullopt when it exceeds b.kmax. Exhaustive; throws
/// BudgetError beyond the size limits.
std::optional<int> exact_2cced(const Graph& g, const OracleBudget& b);

/// Minimum number of operations (edge deletions and/or vertex splits)
/// turning g into a disjoint union of 2-clubs, or nullopt when it exceeds
/// b.kmax. Iterative-deepening search; throws BudgetError beyond the size
/// or degree limits.
std::optional<int> exact_2ccedvs(const Graph& g, const OracleBudget& b);

/// Checks a heuristic's full answer: the log replays on `original`, the
/// clusters exactly cover the edited graph's vertices with matching origin
/// projections, no edge crosses clusters, and every cluster is a 2-club.
/// On failure, stores a reason in *why when provided.
bool verify_solution(const Graph& original, const EditLog& log, const Clustering& c,
                     std::string* why = nullptr);

}  // namespace clubedit

#endif
