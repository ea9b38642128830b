#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kswitch {

using Vertex = int;
using VertexMask = std::uint64_t;

/// Graphs are limited to this many vertices so a neighbourhood fits in one word.
inline constexpr int kMaxVertices = 64;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Bipartition {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

/// Provenance tag for generated graphs; params are kept as text.
struct FamilyInfo {
    std::string name;
    std::map<std::string, std::string> params;

    friend bool operator==(const FamilyInfo&, const FamilyInfo&) = default;
};

class Graph {
public:
    Graph() = default;

    /// Validates and deduplicates. Throws SelfLoop, VertexOutOfRange,
    /// NonCrossingEdge or UnbalancedBipartition.
    static Graph build(int n, std::span<const Edge> edges,
                       std::optional<Bipartition> parts = std::nullopt);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    bool adjacent(Vertex a, Vertex b) const { return (rows_[a] >> b) & 1U; }
    VertexMask neighbor_mask(Vertex v) const { return rows_[v]; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    VertexMask all_vertices() const;

    /// Canonical edge list, lexicographically sorted.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Index of edge ab in edges(), or -1.
    int edge_id(Vertex a, Vertex b) const;

    bool is_bipartite() const { return parts_.has_value(); }
    const Bipartition& bipartition() const;
    /// 0 for the left part, 1 for the right part. Requires a bipartition.
    int side(Vertex v) const { return (left_mask_ >> v) & 1U ? 0 : 1; }
    VertexMask left_mask() const { return left_mask_; }
    /// Number of vertices on each side of a bipartite graph.
    int half_order() const { return n_ / 2; }

    const std::optional<FamilyInfo>& family() const { return family_; }
    void set_family(FamilyInfo info) { family_ = std::move(info); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.left_mask_ == b.left_mask_ &&
               a.parts_.has_value() == b.parts_.has_value();
    }

private:
    int n_ = 0;
    std::vector<VertexMask> rows_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
    std::vector<int> edge_index_;
    std::optional<Bipartition> parts_;
    VertexMask left_mask_ = 0;
    std::optional<FamilyInfo> family_;
};

inline constexpr int kInfiniteDegreeSum = std::numeric_limits<int>::max();

struct DegreeReport {
    int min_degree = 0;
    /// Min of deg(u)+deg(v) over non-adjacent pairs; kInfiniteDegreeSum for complete graphs.
    int ore_general = kInfiniteDegreeSum;
    /// Same over non-adjacent pairs on opposite sides. Present only for bipartite graphs.
    std::optional<int> ore_bip;
};

DegreeReport degree_report(const Graph& g);
/// Throws OreBipOnNonBipartite for graphs without a bipartition.
int ore_bipartite(const Graph& g);

/// Ore-type sum relevant to the graph class: ore_bip for bipartite graphs, ore_general otherwise.
int ore_sum(const Graph& g);

Graph complete_graph(int n);
Graph complete_bipartite(int half);
Graph cycle_graph(int n);
/// Disjoint union; a bipartition is kept only when both inputs carry one.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace kswitch
