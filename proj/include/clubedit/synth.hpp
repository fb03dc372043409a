#ifndef CLUBEDIT_SYNTH_HPP
#define CLUBEDIT_SYNTH_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "clubedit/graph.hpp"

namespace clubedit {

/// Parameters of the planted overlapping-community generator.
/// Requires 0 <= p_out <= p_in <= 1, 0 <= overlap_fraction <= 1,
/// 1 <= communities <= n, and communities >= 2 whenever
/// overlap_fraction > 0 (a second membership needs a second community).
struct SynthParams {
    int n = 100;
    int communities = 5;
    double overlap_fraction = 0.0;
    double p_in = 0.5;
    double p_out = 0.01;
    std::uint64_t seed = 42;
};

struct GroundTruth {
    std::vector<std::set<VertexId>> communities;
};

/// Vertices 0..n-1 get one home community each (round-robin);
/// floor(overlap_fraction * n) of them, sampled uniformly, get a second.
/// Each pair sharing a community draws an edge with p_in, every other pair
/// with p_out. Fully deterministic for a given seed. Throws
/// std::invalid_argument on parameter violations.
std::pair<Graph, GroundTruth> generate_planted(const SynthParams& p);

}  // namespace clubedit

#endif
