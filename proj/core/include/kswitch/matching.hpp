#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "kswitch/graph.hpp"

namespace kswitch {

/// Set of disjoint edges, stored as a sorted canonical edge list plus the matched-vertex set.
class Matching {
public:
    Matching() = default;

    /// Validates against g: every edge must exist and no vertex may repeat. Throws InvalidMatching.
    static Matching from_edges(const Graph& g, std::vector<Edge> edges);
    /// Canonicalises without consulting a graph. Throws InvalidMatching on shared vertices.
    static Matching from_edges(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    VertexMask matched() const { return matched_; }
    bool covers(Vertex v) const { return (matched_ >> v) & 1U; }
    bool contains(Edge e) const;

    /// mate[v] is v's partner or -1.
    std::vector<Vertex> mates(int n) const;

    friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }
    friend auto operator<=>(const Matching& a, const Matching& b) { return a.edges_ <=> b.edges_; }

private:
    std::vector<Edge> edges_;
    VertexMask matched_ = 0;
};

/// Build a matching from a partner array (mate[v] == -1 for unmatched vertices).
Matching matching_from_mates(std::span<const Vertex> mate);

bool is_perfect(const Graph& g, const Matching& m);

/// |M1 xor M2| as edge sets.
int hamming(const Matching& a, const Matching& b);

/// One connected component of M1 xor M2, listed as a vertex walk.
///
/// Cycles start at their smallest vertex and leave along the M1 edge. Paths start
/// at the smaller endpoint. The walk alternates between M1 and M2 edges.
struct SymDiffComponent {
    std::vector<Vertex> vertices;
    bool closed = false;
    /// True when the first edge of the walk belongs to M1.
    bool starts_in_first = true;

    int edge_count() const {
        const int k = static_cast<int>(vertices.size());
        return closed ? k : k - 1;
    }
};

struct SymDiffDecomposition {
    std::vector<SymDiffComponent> cycles;
    std::vector<SymDiffComponent> paths;
    int hamming = 0;
};

/// Cycles are ordered by their smallest vertex, paths likewise.
SymDiffDecomposition symdiff_decompose(int n, const Matching& m1, const Matching& m2);
/// Same, from partner arrays (-1 for unmatched). The hamming field is filled in.
SymDiffDecomposition symdiff_decompose(std::span<const Vertex> mate1, std::span<const Vertex> mate2);

}  // namespace kswitch
