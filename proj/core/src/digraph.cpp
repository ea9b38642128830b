#include "kswitch/digraph.hpp"

#include <algorithm>
#include <bit>

#include "kswitch/errors.hpp"

namespace kswitch {

Digraph::Digraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorCode::GraphTooLarge, "digraph order " + std::to_string(n) + " outside 0..64");
    out_.assign(n, 0);
    in_.assign(n, 0);
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
    Digraph d(n);
    for (const auto& [u, v] : arcs) d.add_arc(u, v);
    return d;
}

void Digraph::add_arc(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw Error(ErrorCode::VertexOutOfRange,
                    "arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw Error(ErrorCode::SelfLoop, "loop at " + std::to_string(u));
    out_[u] |= bit(v);
    in_[v] |= bit(u);
}

int Digraph::out_degree(Vertex u) const { return std::popcount(out_[u]); }
int Digraph::in_degree(Vertex u) const { return std::popcount(in_[u]); }

int Digraph::min_out_degree() const {
    int best = n_ == 0 ? 0 : n_;
    for (Vertex u = 0; u < n_; ++u) best = std::min(best, out_degree(u));
    return best;
}

int Digraph::min_semidegree() const {
    int best = n_ == 0 ? 0 : n_;
    for (Vertex u = 0; u < n_; ++u) best = std::min({best, out_degree(u), in_degree(u)});
    return best;
}

bool Digraph::oriented() const {
    for (Vertex u = 0; u < n_; ++u)
        if ((out_[u] & in_[u]) != 0) return false;
    return true;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
            if (has_arc(u, v)) out.emplace_back(u, v);
    return out;
}

Digraph matching_to_digraph(const Graph& g, const Matching& m) {
    const std::vector<Vertex> mate = m.mates(g.order());
    Digraph d(g.order());
    for (const Edge& e : g.edges()) {
        if (m.contains(e)) continue;
        if (mate[e.u] >= 0) d.add_arc(mate[e.u], e.v);
        if (mate[e.v] >= 0) d.add_arc(mate[e.v], e.u);
    }
    return d;
}

std::pair<Graph, Matching> digraph_to_bip(const Digraph& d) {
    const int n = d.order();
    if (2 * n > kMaxVertices) throw Error(ErrorCode::GraphTooLarge, "bipartite image needs more than 64 vertices");
    std::vector<Edge> edges;
    std::vector<Edge> matched;
    Bipartition parts;
    for (Vertex i = 0; i < n; ++i) {
        parts.left.push_back(i);
        parts.right.push_back(n + i);
        edges.push_back({i, n + i});
        matched.push_back({i, n + i});
    }
    for (const auto& [u, v] : d.arcs()) edges.push_back({u, n + v});
    Graph g = Graph::build(2 * n, edges, parts);
    Matching m = Matching::from_edges(g, matched);
    return {std::move(g), std::move(m)};
}

Digraph bip_to_digraph(const Graph& g, const Matching& m) {
    if (!g.is_bipartite()) throw Error(ErrorCode::InvalidArgument, "bip_to_digraph needs a bipartite graph");
    if (!is_perfect(g, m)) throw Error(ErrorCode::InvalidArgument, "bip_to_digraph needs a perfect matching");
    const int h = g.half_order();
    std::vector<Vertex> left(h);
    std::vector<Vertex> right(h);
    const std::vector<Vertex> mate = m.mates(g.order());
    for (int i = 0; i < h; ++i) {
        left[i] = g.bipartition().left[i];
        right[i] = mate[left[i]];
    }
    Digraph d(h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            if (i != j && g.adjacent(left[i], right[j])) d.add_arc(i, j);
    return d;
}

namespace {

bool extend(const Digraph& d, Vertex start, Vertex cur, int remaining, VertexMask on_path,
            std::vector<Vertex>& path) {
    if (remaining == 1) return d.has_arc(cur, start);
    // Only vertices above start, so every cycle is found once from its minimum.
    VertexMask next = d.out_mask(cur) & ~on_path & ~((bit(start) << 1) - 1);
    while (next != 0) {
        const Vertex v = std::countr_zero(next);
        next &= next - 1;
        path.push_back(v);
        if (extend(d, start, v, remaining - 1, on_path | bit(v), path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_directed_cycle_at_most(const Digraph& d, int k) {
    for (int len = 2; len <= k; ++len) {
        for (Vertex s = 0; s < d.order(); ++s) {
            std::vector<Vertex> path{s};
            if (extend(d, s, s, len, bit(s), path)) return path;
        }
    }
    return std::nullopt;
}

Digraph gen_Hp(int p) {
    if (p < 3) throw Error(ErrorCode::InvalidArgument, "H_p needs p >= 3");
    Digraph d(p);
    const int s = (p - 1) / 2;
    for (Vertex i = 0; i < p; ++i)
        for (int o = 1; o <= s; ++o) d.add_arc(i, (i + o) % p);
    return d;
}

IsolatedInstance gen_isolated_general(int n) {
    if (n % 2 != 0) throw Error(ErrorCode::OddVertexCount, "G_n needs an even order");
    if (n < 8) throw Error(ErrorCode::InvalidArgument, "G_n needs n >= 8");
    const int p = n / 2;
    const int s = (p - 1) / 2;
    const int a_count = (s + 1) / 2;
    auto a = [](int i) { return 2 * i; };
    auto b = [](int i) { return 2 * i + 1; };
    std::vector<Edge> edges;
    std::vector<Edge> matched;
    for (int i = 0; i < p; ++i) {
        edges.push_back({a(i), b(i)});
        matched.push_back({a(i), b(i)});
        for (int o = 1; o <= s; ++o) {
            const int j = (i + o) % p;
            const Vertex from = o <= a_count ? a(i) : b(i);
            edges.push_back(make_edge(from, a(j)));
            edges.push_back(make_edge(from, b(j)));
        }
    }
    IsolatedInstance out{Graph::build(n, edges), {}, 1 + 2 * (s / 2) + s};
    out.matching = Matching::from_edges(out.graph, matched);
    out.graph.set_family({"isolated", {{"n", std::to_string(n)}}});
    return out;
}

std::optional<Edge> edge_in_two_switch(const Graph& g, const Matching& m, Edge e) {
    e = make_edge(e.u, e.v);
    if (!m.contains(e)) throw Error(ErrorCode::InvalidArgument, "edge is not in the matching");
    for (const Edge& f : m.edges()) {
        if (f == e) continue;
        if ((g.adjacent(e.u, f.u) && g.adjacent(e.v, f.v)) || (g.adjacent(e.u, f.v) && g.adjacent(e.v, f.u)))
            return f;
    }
    return std::nullopt;
}

}  // namespace kswitch
