#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kswitch/graph.hpp"
#include "kswitch/matching.hpp"

namespace kswitch {

using Arc = std::pair<Vertex, Vertex>;

/// Loopless digraph on at most 64 vertices, stored as out- and in-neighbour masks.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    /// Throws VertexOutOfRange, SelfLoop or GraphTooLarge.
    static Digraph from_arcs(int n, std::span<const Arc> arcs);

    int order() const { return n_; }
    void add_arc(Vertex u, Vertex v);
    bool has_arc(Vertex u, Vertex v) const { return (out_[u] >> v) & 1U; }
    VertexMask out_mask(Vertex u) const { return out_[u]; }
    VertexMask in_mask(Vertex u) const { return in_[u]; }
    int out_degree(Vertex u) const;
    int in_degree(Vertex u) const;
    int min_out_degree() const;
    /// Minimum over vertices of min(indegree, outdegree).
    int min_semidegree() const;
    /// No pair of opposite arcs.
    bool oriented() const;
    /// Arcs in lexicographic order.
    std::vector<Arc> arcs() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int n_ = 0;
    std::vector<VertexMask> out_;
    std::vector<VertexMask> in_;
};

/// Arc from the partner of x to w for every non-matching edge xw.
Digraph matching_to_digraph(const Graph& g, const Matching& m);

/// Bipartite graph on a_i = i and b_i = n + i with a_i b_i and a_i b_j for each arc i -> j,
/// together with M = {a_i b_i}.
std::pair<Graph, Matching> digraph_to_bip(const Digraph& d);

/// Inverse of digraph_to_bip. u_i is the matching edge with the i-th smallest left endpoint;
/// u_i -> u_j when its left endpoint is adjacent to the right endpoint of u_j.
Digraph bip_to_digraph(const Graph& g, const Matching& m);

/// Shortest directed cycle of length at most k, as a vertex list starting at its smallest
/// vertex; nullopt when none exists.
std::optional<std::vector<Vertex>> find_directed_cycle_at_most(const Digraph& d, int k);

/// Circulant tournament-like digraph: i -> j when (j - i) mod p lies in 1..floor((p-1)/2).
Digraph gen_Hp(int p);

struct IsolatedInstance {
    Graph graph;
    Matching matching;
    /// Minimum degree predicted from the split sizes: 1 + 2*floor(s/2) + s with s = floor((n/2-1)/2).
    int predicted_min_degree = 0;
};

/// G_n built from H_{n/2} with a_i = 2i, b_i = 2i+1; the lower half of the circulant offsets
/// (rounded up) goes to a_i. Requires even n >= 8.
IsolatedInstance gen_isolated_general(int n);

/// Matching edge f such that e and f span an alternating 4-cycle, or nullopt.
std::optional<Edge> edge_in_two_switch(const Graph& g, const Matching& m, Edge e);

/// Reference value from the Caccetta-Haggkvist literature: graphs with minimum degree above
/// ceil(0.3465 n) are known to have no isolated perfect matching in H_3. Reported, never derived.
inline constexpr double kIsolationDegreeConstant = 0.3465;

}  // namespace kswitch
