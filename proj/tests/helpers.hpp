#ifndef CLUBEDIT_TEST_HELPERS_HPP
#define CLUBEDIT_TEST_HELPERS_HPP

#include <random>
#include <set>
#include <vector>

#include "clubedit/graph.hpp"

namespace testutil {

inline clubedit::Graph path(int n, int first = 0) {
    clubedit::Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(first + i);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(first + i, first + i + 1);
    return g;
}

inline clubedit::Graph cycle(int n, int first = 0) {
    clubedit::Graph g = path(n, first);
    if (n > 2)
        g.add_edge(first + n - 1, first);
    return g;
}

inline clubedit::Graph complete(int n, int first = 0) {
    clubedit::Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(first + i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(first + i, first + j);
    return g;
}

inline clubedit::Graph star(int leaves, int first = 0) {
    clubedit::Graph g;
    g.add_vertex(first);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(first, first + i);
    return g;
}

/// Two 4-cycles sharing vertex 0: 0-1-3-2-0 and 0-4-6-5-0.
inline clubedit::Graph double_square() {
    clubedit::Graph g;
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(0, 4);
    g.add_edge(0, 5);
    g.add_edge(4, 6);
    g.add_edge(5, 6);
    return g;
}

/// Hub 0 shared by three 4-cycle gadgets, 0-1-3-2-0, 0-4-6-5-0 and
/// 0-7-9-8-0, plus the cross edge 2-7 between two gadgets.
inline clubedit::Graph hub_three_squares() {
    clubedit::Graph g;
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(0, 4);
    g.add_edge(0, 5);
    g.add_edge(4, 6);
    g.add_edge(5, 6);
    g.add_edge(0, 7);
    g.add_edge(0, 8);
    g.add_edge(7, 9);
    g.add_edge(8, 9);
    g.add_edge(2, 7);
    return g;
}

inline clubedit::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    clubedit::Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(i);
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit() < p)
                g.add_edge(i, j);
    return g;
}

/// A random connected diameter-<=2 graph on [first, first+size): a star plus
/// random extra edges (extra edges can only shrink induced distances).
inline clubedit::Graph random_two_club(int size, double extra, std::mt19937_64& rng, int first = 0) {
    clubedit::Graph g = star(size - 1, first);
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int i = 1; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (unit() < extra)
                g.add_edge(first + i, first + j);
    return g;
}

inline void merge_into(clubedit::Graph& dst, const clubedit::Graph& src) {
    for (clubedit::VertexId v : src.vertices()) {
        dst.add_vertex(v);
        for (clubedit::VertexId w : src.neighbors(v))
            if (v < w)
                dst.add_edge(v, w);
    }
}

/// Square clustering coefficient recomputed the slow way: for every pair of
/// the vertex's neighbors, 4-cycle closers are found by scanning all
/// vertices, and the potential count follows from plain degree arithmetic.
inline clubedit::Rational brute_square_coefficient(const clubedit::Graph& g, clubedit::VertexId v) {
    std::vector<clubedit::VertexId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
    auto all = g.vertices();
    long long squares_total = 0;
    long long potential_total = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            clubedit::VertexId u = nbrs[i];
            clubedit::VertexId w = nbrs[j];
            long long squares = 0;
            for (clubedit::VertexId z : all)
                if (z != v && g.has_edge(u, z) && g.has_edge(z, w))
                    ++squares;
            long long theta = g.has_edge(u, w) ? 1 : 0;
            long long du = static_cast<long long>(g.degree(u));
            long long dw = static_cast<long long>(g.degree(w));
            long long missing = (du - 1 - squares - theta) + (dw - 1 - squares - theta);
            squares_total += squares;
            potential_total += squares + missing;
        }
    }
    if (potential_total == 0)
        return {0, 1};
    return {squares_total, potential_total};
}

}  // namespace testutil

#endif
