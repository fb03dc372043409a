#include "clubedit/synth.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace clubedit {

std::pair<Graph, GroundTruth> generate_planted(const SynthParams& p) {
    if (p.n < 1)
        throw std::invalid_argument("n must be positive");
    if (p.communities < 1 || p.communities > p.n)
        throw std::invalid_argument("communities must lie in [1, n]");
    if (p.overlap_fraction < 0.0 || p.overlap_fraction > 1.0)
        throw std::invalid_argument("overlap_fraction must lie in [0, 1]");
    if (p.p_in < 0.0 || p.p_in > 1.0 || p.p_out < 0.0 || p.p_out > p.p_in)
        throw std::invalid_argument("need 0 <= p_out <= p_in <= 1");
    int doubled = static_cast<int>(std::floor(p.overlap_fraction * p.n));
    if (doubled > 0 && p.communities < 2)
        throw std::invalid_argument("overlap requires at least 2 communities");

    std::mt19937_64 rng(p.seed);
    // Uniform double in [0,1) from the top 53 bits; avoids distribution
    // classes whose output is not pinned down by the standard.
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::vector<int> primary(p.n);
    for (int v = 0; v < p.n; ++v)
        primary[v] = v % p.communities;

    std::vector<int> second(p.n, -1);
    std::vector<int> pool(p.n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < doubled; ++i) {
        int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(p.n - i));
        std::swap(pool[i], pool[j]);
        int v = pool[i];
        second[v] = (primary[v] + 1 +
                     static_cast<int>(rng() % static_cast<std::uint64_t>(p.communities - 1))) %
                    p.communities;
    }

    Graph g;
    for (int v = 0; v < p.n; ++v)
        g.add_vertex(v);
    auto shares = [&](int u, int w) {
        return primary[u] == primary[w] || primary[u] == second[w] ||
               (second[u] != -1 && (second[u] == primary[w] || second[u] == second[w]));
    };
    for (int u = 0; u < p.n; ++u)
        for (int w = u + 1; w < p.n; ++w)
            if (unit() < (shares(u, w) ? p.p_in : p.p_out))
                g.add_edge(u, w);

    GroundTruth truth;
    truth.communities.assign(p.communities, {});
    for (int v = 0; v < p.n; ++v) {
        truth.communities[primary[v]].insert(v);
        if (second[v] != -1)
            truth.communities[second[v]].insert(v);
    }
    return {std::move(g), std::move(truth)};
}

}  // namespace clubedit
