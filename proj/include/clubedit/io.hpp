#ifndef CLUBEDIT_IO_HPP
#define CLUBEDIT_IO_HPP

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "clubedit/graph.hpp"

namespace clubedit {

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
          line(line_number) {}
    int line;
};

/// Edge-list reader. Lines are "u v" or "u v w" with nonnegative integer
/// ids; '#'/'%' lines are comments; blank lines are skipped. Duplicate edges
/// and self-loops are dropped (their endpoints still register as vertices,
/// which is how isolated vertices round-trip: as "u u" lines). Weights are
/// parsed and discarded unless `min_weight` is given, in which case edges
/// with weight < min_weight are dropped; a missing third column counts as
/// weight 1. Malformed input throws ParseError with the line number.
Graph parse_edge_list(std::istream& in, std::optional<double> min_weight = std::nullopt);

/// One edge "u v" per line, ascending; isolated vertices appear as "u u".
void write_edge_list(std::ostream& out, const Graph& g);

/// One vertex set per line, ids ascending and space-separated; used for both
/// cluster files and ground-truth community files. Reading skips comments
/// and blank lines; writing orders lines lexicographically (so by smallest
/// member first).
std::vector<std::set<VertexId>> read_vertex_sets(std::istream& in);
void write_vertex_sets(std::ostream& out, const std::vector<std::set<VertexId>>& sets);

/// Edit log: "D u v" per deletion, "S v -> a b ..." per split (the neighbors
/// v keeps). Copy ids are not serialized; replay re-derives them, which is
/// deterministic.
void write_edit_log(std::ostream& out, const EditLog& log);
EditLog read_edit_log(std::istream& in);

}  // namespace clubedit

#endif
