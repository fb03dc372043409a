#include "clubedit/io.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

namespace clubedit {

namespace {

bool skippable(const std::string& line) {
    auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#' || line[first] == '%';
}

VertexId parse_id(const std::string& token, int line_number) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line_number, "expected a vertex id, got '" + token + "'");
    }
    if (used != token.size() || value < 0 || value > INT32_MAX)
        throw ParseError(line_number, "expected a nonnegative vertex id, got '" + token + "'");
    return static_cast<VertexId>(value);
}

double parse_weight(const std::string& token, int line_number) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line_number, "expected an edge weight, got '" + token + "'");
    }
    if (used != token.size())
        throw ParseError(line_number, "expected an edge weight, got '" + token + "'");
    return value;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token)
        tokens.push_back(token);
    return tokens;
}

}  // namespace

Graph parse_edge_list(std::istream& in, std::optional<double> min_weight) {
    Graph g;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (skippable(line))
            continue;
        auto tokens = tokens_of(line);
        if (tokens.size() < 2 || tokens.size() > 3)
            throw ParseError(line_number, "expected 'u v' or 'u v w', got '" + line + "'");
        VertexId u = parse_id(tokens[0], line_number);
        VertexId v = parse_id(tokens[1], line_number);
        double w = tokens.size() == 3 ? parse_weight(tokens[2], line_number) : 1.0;
        g.add_vertex(u);
        g.add_vertex(v);
        if (min_weight && w < *min_weight)
            continue;
        g.add_edge(u, v);
    }
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (VertexId u : g.vertices()) {
        if (g.degree(u) == 0) {
            out << u << ' ' << u << '\n';
            continue;
        }
        for (VertexId v : g.neighbors(u))
            if (u < v)
                out << u << ' ' << v << '\n';
    }
}

std::vector<std::set<VertexId>> read_vertex_sets(std::istream& in) {
    std::vector<std::set<VertexId>> sets;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (skippable(line))
            continue;
        std::set<VertexId> members;
        for (const auto& token : tokens_of(line))
            members.insert(parse_id(token, line_number));
        sets.push_back(std::move(members));
    }
    return sets;
}

void write_vertex_sets(std::ostream& out, const std::vector<std::set<VertexId>>& sets) {
    std::vector<std::set<VertexId>> ordered = sets;
    std::sort(ordered.begin(), ordered.end());
    for (const auto& members : ordered) {
        bool first = true;
        for (VertexId v : members) {
            if (!first)
                out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
}

void write_edit_log(std::ostream& out, const EditLog& log) {
    for (const EditOp& op : log) {
        if (op.kind == EditKind::DeleteEdge) {
            out << "D " << op.u << ' ' << op.v << '\n';
        } else {
            out << "S " << op.u << " ->";
            for (VertexId v : op.internal)
                out << ' ' << v;
            out << '\n';
        }
    }
}

EditLog read_edit_log(std::istream& in) {
    EditLog log;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (skippable(line))
            continue;
        auto tokens = tokens_of(line);
        if (tokens[0] == "D") {
            if (tokens.size() != 3)
                throw ParseError(line_number, "expected 'D u v', got '" + line + "'");
            log.push(EditOp::delete_edge(parse_id(tokens[1], line_number),
                                         parse_id(tokens[2], line_number)));
        } else if (tokens[0] == "S") {
            if (tokens.size() < 4 || tokens[2] != "->")
                throw ParseError(line_number, "expected 'S v -> neighbors...', got '" + line + "'");
            VertexId v = parse_id(tokens[1], line_number);
            std::vector<VertexId> internal;
            for (std::size_t i = 3; i < tokens.size(); ++i)
                internal.push_back(parse_id(tokens[i], line_number));
            log.push(EditOp::split_vertex(v, std::move(internal), -1));
        } else {
            throw ParseError(line_number, "unknown edit op '" + tokens[0] + "'");
        }
    }
    return log;
}

}  // namespace clubedit
