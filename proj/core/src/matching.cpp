#include "kswitch/matching.hpp"

#include <algorithm>
#include <bit>

#include "kswitch/errors.hpp"

namespace kswitch {

Matching Matching::from_edges(std::vector<Edge> edges) {
    Matching m;
    for (Edge& e : edges) {
        e = make_edge(e.u, e.v);
        if (e.u < 0 || e.v >= kMaxVertices || e.u == e.v)
            throw Error(ErrorCode::InvalidMatching,
                        "bad edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if ((m.matched_ & (bit(e.u) | bit(e.v))) != 0)
            throw Error(ErrorCode::InvalidMatching,
                        "edges share a vertex at (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        m.matched_ |= bit(e.u) | bit(e.v);
    }
    std::sort(edges.begin(), edges.end());
    m.edges_ = std::move(edges);
    return m;
}

Matching Matching::from_edges(const Graph& g, std::vector<Edge> edges) {
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
            throw Error(ErrorCode::InvalidMatching,
                        "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
    }
    return from_edges(std::move(edges));
}

bool Matching::contains(Edge e) const {
    e = make_edge(e.u, e.v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<Vertex> Matching::mates(int n) const {
    std::vector<Vertex> mate(n, -1);
    for (const Edge& e : edges_) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    return mate;
}

Matching matching_from_mates(std::span<const Vertex> mate) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
        if (mate[v] > v) edges.push_back({v, mate[v]});
    return Matching::from_edges(std::move(edges));
}

bool is_perfect(const Graph& g, const Matching& m) {
    return 2 * static_cast<int>(m.size()) == g.order();
}

int hamming(const Matching& a, const Matching& b) {
    int common = 0;
    auto i = a.edges().begin();
    auto j = b.edges().begin();
    while (i != a.edges().end() && j != b.edges().end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    return static_cast<int>(a.size() + b.size()) - 2 * common;
}

SymDiffDecomposition symdiff_decompose(int n, const Matching& m1, const Matching& m2) {
    const std::vector<Vertex> mate1 = m1.mates(n);
    const std::vector<Vertex> mate2 = m2.mates(n);
    return symdiff_decompose(mate1, mate2);
}

SymDiffDecomposition symdiff_decompose(std::span<const Vertex> mate1, std::span<const Vertex> mate2) {
    const int n = static_cast<int>(mate1.size());
    // Partner across a symmetric-difference edge, or -1 when the edge is shared or absent.
    auto d1 = [&](Vertex v) { return mate1[v] >= 0 && mate1[v] != mate2[v] ? mate1[v] : -1; };
    auto d2 = [&](Vertex v) { return mate2[v] >= 0 && mate2[v] != mate1[v] ? mate2[v] : -1; };

    SymDiffDecomposition out;
    std::vector<char> seen(n, 0);

    auto walk = [&](Vertex start, bool first_in_m1) {
        SymDiffComponent comp;
        comp.starts_in_first = first_in_m1;
        Vertex cur = start;
        bool use_m1 = first_in_m1;
        while (true) {
            comp.vertices.push_back(cur);
            seen[cur] = 1;
            const Vertex nxt = use_m1 ? d1(cur) : d2(cur);
            if (nxt < 0) break;
            if (nxt == start) {
                comp.closed = true;
                break;
            }
            cur = nxt;
            use_m1 = !use_m1;
        }
        out.hamming += comp.edge_count();
        return comp;
    };

    // Paths start from their smaller endpoint (a vertex with one symmetric-difference edge).
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v]) continue;
        const bool a = d1(v) >= 0;
        const bool b = d2(v) >= 0;
        if (a != b) out.paths.push_back(walk(v, a));
    }
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v]) continue;
        if (d1(v) >= 0 && d2(v) >= 0) out.cycles.push_back(walk(v, true));
    }
    auto by_min = [](const SymDiffComponent& a, const SymDiffComponent& b) {
        return *std::min_element(a.vertices.begin(), a.vertices.end()) <
               *std::min_element(b.vertices.begin(), b.vertices.end());
    };
    std::stable_sort(out.paths.begin(), out.paths.end(), by_min);
    return out;
}

}  // namespace kswitch
