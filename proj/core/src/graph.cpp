#include "kswitch/graph.hpp"

#include <algorithm>
#include <bit>

#include "kswitch/errors.hpp"

namespace kswitch {

Graph Graph::build(int n, std::span<const Edge> edges, std::optional<Bipartition> parts) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    if (n > kMaxVertices)
        throw Error(ErrorCode::GraphTooLarge, std::to_string(n) + " vertices exceeds " +
                                                  std::to_string(kMaxVertices));
    Graph g;
    g.n_ = n;
    g.rows_.assign(n, 0);

    if (parts) {
        if (parts->left.size() != parts->right.size())
            throw Error(ErrorCode::UnbalancedBipartition,
                        std::to_string(parts->left.size()) + " vs " +
                            std::to_string(parts->right.size()));
        VertexMask left = 0;
        VertexMask right = 0;
        for (Vertex v : parts->left) {
            if (v < 0 || v >= n) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
            left |= bit(v);
        }
        for (Vertex v : parts->right) {
            if (v < 0 || v >= n) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
            right |= bit(v);
        }
        const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
        if ((left & right) != 0 || (left | right) != all ||
            std::popcount(left) != static_cast<int>(parts->left.size()) ||
            std::popcount(right) != static_cast<int>(parts->right.size()))
            throw Error(ErrorCode::InvalidArgument, "bipartition is not a partition of the vertices");
        std::sort(parts->left.begin(), parts->left.end());
        std::sort(parts->right.begin(), parts->right.end());
        g.left_mask_ = left;
        g.parts_ = std::move(parts);
    }

    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(e.u));
        if (g.parts_ && g.side(e.u) == g.side(e.v))
            throw Error(ErrorCode::NonCrossingEdge,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        g.rows_[e.u] |= bit(e.v);
        g.rows_[e.v] |= bit(e.u);
    }

    g.adj_.assign(n, {});
    g.edge_index_.assign(static_cast<std::size_t>(n) * n, -1);
    for (Vertex u = 0; u < n; ++u) {
        for (VertexMask m = g.rows_[u]; m; m &= m - 1) {
            const Vertex v = std::countr_zero(m);
            g.adj_[u].push_back(v);
            if (u < v) {
                const int id = static_cast<int>(g.edges_.size());
                g.edges_.push_back({u, v});
                g.edge_index_[u * n + v] = id;
                g.edge_index_[v * n + u] = id;
            }
        }
    }
    return g;
}

VertexMask Graph::all_vertices() const {
    return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

int Graph::edge_id(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    return edge_index_[a * n_ + b];
}

const Bipartition& Graph::bipartition() const {
    if (!parts_) throw Error(ErrorCode::InvalidArgument, "graph has no bipartition");
    return *parts_;
}

DegreeReport degree_report(const Graph& g) {
    DegreeReport r;
    const int n = g.order();
    r.min_degree = n == 0 ? 0 : n;
    for (Vertex v = 0; v < n; ++v) r.min_degree = std::min(r.min_degree, g.degree(v));
    int best_bip = kInfiniteDegreeSum;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            const int s = g.degree(u) + g.degree(v);
            r.ore_general = std::min(r.ore_general, s);
            if (g.is_bipartite() && g.side(u) != g.side(v)) best_bip = std::min(best_bip, s);
        }
    }
    if (g.is_bipartite()) r.ore_bip = best_bip;
    return r;
}

int ore_bipartite(const Graph& g) {
    if (!g.is_bipartite())
        throw Error(ErrorCode::OreBipOnNonBipartite, "bipartite Ore sum requested");
    return *degree_report(g).ore_bip;
}

int ore_sum(const Graph& g) {
    const DegreeReport r = degree_report(g);
    return g.is_bipartite() ? *r.ore_bip : r.ore_general;
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    Graph g = Graph::build(n, edges);
    g.set_family({"K", {{"n", std::to_string(n)}}});
    return g;
}

Graph complete_bipartite(int half) {
    std::vector<Edge> edges;
    Bipartition parts;
    for (Vertex u = 0; u < half; ++u) {
        parts.left.push_back(u);
        parts.right.push_back(half + u);
        for (Vertex v = 0; v < half; ++v) edges.push_back({u, half + v});
    }
    Graph g = Graph::build(2 * half, edges, parts);
    g.set_family({"Kbip", {{"n", std::to_string(half)}}});
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
    Graph g = Graph::build(n, edges);
    g.set_family({"C", {{"n", std::to_string(n)}}});
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int shift = a.order();
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
    std::optional<Bipartition> parts;
    if (a.is_bipartite() && b.is_bipartite()) {
        parts = a.bipartition();
        for (Vertex v : b.bipartition().left) parts->left.push_back(v + shift);
        for (Vertex v : b.bipartition().right) parts->right.push_back(v + shift);
    }
    return Graph::build(a.order() + b.order(), edges, parts);
}

}  // namespace kswitch
