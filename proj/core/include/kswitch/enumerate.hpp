#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kswitch/graph.hpp"
#include "kswitch/matching.hpp"

namespace kswitch {

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

/// Visit every matching with exactly `size` edges in canonical lexicographic order.
/// Returning false from the visitor stops the walk.
void for_each_matching(const Graph& g, int size,
                       const std::function<bool(const std::vector<Edge>&)>& visit);

/// All matchings of the given size, lexicographically sorted.
/// Throws EnumerationBudgetExceeded once more than `cap` matchings are found.
std::vector<Matching> enumerate_matchings(const Graph& g, int size,
                                          std::uint64_t cap = kDefaultEnumerationCap);

std::vector<Matching> enumerate_perfect_matchings(const Graph& g,
                                                  std::uint64_t cap = kDefaultEnumerationCap);

/// Number of matchings of a given size, by memoised branching on the lowest free vertex.
std::uint64_t count_matchings(const Graph& g, int size);

/// Number of perfect matchings. Bipartite graphs use the permanent of the biadjacency matrix.
std::uint64_t count_perfect(const Graph& g);

/// Permanent of a 0/1 square matrix given as row bitmasks (Ryser's formula with Gray code order).
std::uint64_t permanent_01(const std::vector<VertexMask>& rows, int size);

/// Image of a near-perfect matching under the augmenting injection into
/// (pair of vertices) x (perfect matchings).
struct InjectionImage {
    Edge pair;
    Matching perfect;

    friend auto operator<=>(const InjectionImage&, const InjectionImage&) = default;
};

/// Throws NoAugmentingEdge when the two exposed vertices cannot be absorbed,
/// InvalidArgument when the input does not leave exactly two vertices exposed.
InjectionImage near_perfect_injection(const Graph& g, const Matching& near);

}  // namespace kswitch
