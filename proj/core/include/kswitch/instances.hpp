#pragma once

#include <cstdint>

#include "kswitch/graph.hpp"
#include "kswitch/matching.hpp"
#include "kswitch/reconfig.hpp"

namespace kswitch {

/// A matching and one switch along a single alternating cycle, in a host graph.
struct RefineInstance {
    Graph graph;
    Matching matching;
    SwitchStep step;
    /// Support cycle u_1..u_L with u_1u_2 in the matching.
    std::vector<Vertex> cycle;
    /// No chord of the support cycle joins positions at odd distance >= 3.
    bool chordless = false;
};

struct RefineInstanceOptions {
    /// 6 or 8.
    int cycle_length = 8;
    /// Vertex count, or side size for bipartite hosts.
    int n = 10;
    bool bipartite = false;
    /// Remove every even chord so the split-on-chord shortcut is unavailable.
    bool chordless = false;
    /// Upper bound on random edge deletions attempted after the chords are removed.
    int deletions = 16;
};

/// Random instance whose host meets the hypothesis of the matching refinement
/// (refine_4_to_3 for 8-cycles, refine_3_to_2 for 6-cycles).
///
/// Starts from K_n (or K_{n,n}), places the support cycle and a perfect matching on random
/// vertices, optionally drops the even chords, then deletes random edges off the cycle and
/// the matching while the hypothesis still holds. Throws InfeasibleDegree when the
/// hypothesis fails already after the chord removal.
RefineInstance gen_refine_instance(const RefineInstanceOptions& opts, std::uint64_t seed);

}  // namespace kswitch
