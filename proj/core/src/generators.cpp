#include "kswitch/generators.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kswitch/errors.hpp"
#include "kswitch/rng.hpp"

namespace kswitch {

namespace {

std::vector<Vertex> take_range(Vertex& next, int count) {
    std::vector<Vertex> out(count);
    for (int i = 0; i < count; ++i) out[i] = next++;
    return out;
}

void join_all(std::vector<Edge>& edges, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex u : a)
        for (Vertex v : b) edges.push_back(make_edge(u, v));
}

void make_clique(std::vector<Edge>& edges, const std::vector<Vertex>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) edges.push_back(make_edge(a[i], a[j]));
}

void check_gamma(Rational gamma) {
    if (gamma <= Rational(0) || gamma > Rational(1))
        throw Error(ErrorCode::InvalidArgument, "gamma must lie in (0,1], got " + gamma.to_string());
}

std::string str(int x) { return std::to_string(x); }

}  // namespace

GFamilyParts g_family_parts(int k, int p, Rational gamma, int n) {
    if (k < 1 || p < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "k, p, n must be positive");
    check_gamma(gamma);
    const auto gn = gamma.times_integer(n);
    if (!gn || *gn % 2 != 0)
        throw Error(ErrorCode::DivisibilityViolation, "gamma*n/2 must be an integer");
    const int half = static_cast<int>(*gn / 2);
    const int cyc = p * (k + 1);
    const int ny = half - cyc;
    const int nz = n - half - cyc;
    if (ny < 0 || nz < 0)
        throw Error(ErrorCode::DivisibilityViolation,
                    "need gamma*n/2 >= p(k+1); got " + str(half) + " < " + str(cyc));
    GFamilyParts parts;
    Vertex next = 0;
    parts.x = take_range(next, 2 * cyc);
    parts.y = take_range(next, ny);
    parts.z = take_range(next, nz);
    return parts;
}

Graph gen_G_family(int k, int p, Rational gamma, int n) {
    const GFamilyParts parts = g_family_parts(k, p, gamma, n);
    std::vector<Edge> edges;
    const int len = 2 * (k + 1);
    for (int c = 0; c < p; ++c) {
        const Vertex base = c * len;
        for (int t = 0; t < len; ++t) edges.push_back(make_edge(base + t, base + (t + 1) % len));
    }
    join_all(edges, parts.y, parts.x);
    join_all(edges, parts.y, parts.z);
    Graph g = Graph::build(n, edges);
    g.set_family({"G", {{"k", str(k)}, {"p", str(p)}, {"gamma", gamma.to_string()}, {"n", str(n)}}});
    return g;
}

GFamilyBipParts g_family_bip_parts(int k, int p, Rational gamma, int n) {
    if (k < 1 || p < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "k, p, n must be positive");
    check_gamma(gamma);
    const auto gn = gamma.times_integer(n);
    if (!gn) throw Error(ErrorCode::DivisibilityViolation, "gamma*n must be an integer");
    const int cyc = p * (k + 1);
    const int a2 = static_cast<int>(*gn) - cyc;
    const int b2 = 2 * n - static_cast<int>(*gn) - cyc;
    if (a2 < 0 || b2 < 0)
        throw Error(ErrorCode::DivisibilityViolation,
                    "need gamma*n >= p(k+1); got " + std::to_string(*gn) + " < " + str(cyc));
    GFamilyBipParts parts;
    Vertex next = 0;
    parts.x1 = take_range(next, cyc);
    parts.y1 = take_range(next, (a2 + 1) / 2);
    parts.z1 = take_range(next, b2 / 2);
    parts.x2 = take_range(next, cyc);
    parts.y2 = take_range(next, a2 / 2);
    parts.z2 = take_range(next, (b2 + 1) / 2);
    return parts;
}

Graph gen_G_family_bip(int k, int p, Rational gamma, int n) {
    const GFamilyBipParts parts = g_family_bip_parts(k, p, gamma, n);
    std::vector<Edge> edges;
    for (int c = 0; c < p; ++c) {
        for (int t = 0; t <= k; ++t) {
            const int i = c * (k + 1) + t;
            const int j = c * (k + 1) + (t + 1) % (k + 1);
            edges.push_back(make_edge(parts.x1[i], parts.x2[i]));
            edges.push_back(make_edge(parts.x2[i], parts.x1[j]));
        }
    }
    join_all(edges, parts.y1, parts.x2);
    join_all(edges, parts.y1, parts.z2);
    join_all(edges, parts.y2, parts.x1);
    join_all(edges, parts.y2, parts.z1);
    Bipartition bp;
    for (const auto* side : {&parts.x1, &parts.y1, &parts.z1})
        bp.left.insert(bp.left.end(), side->begin(), side->end());
    for (const auto* side : {&parts.x2, &parts.y2, &parts.z2})
        bp.right.insert(bp.right.end(), side->begin(), side->end());
    Graph g = Graph::build(2 * n, edges, bp);
    g.set_family({"Gbip", {{"k", str(k)}, {"p", str(p)}, {"gamma", gamma.to_string()}, {"n", str(n)}}});
    return g;
}

std::vector<std::vector<Vertex>> f_layers(int k, int n) {
    if (k < 2) throw Error(ErrorCode::InvalidArgument, "F needs k >= 2");
    if (n % 2 != 0) throw Error(ErrorCode::OddVertexCount, "F needs an even vertex count, got " + str(n));
    if (n < k + 1) throw Error(ErrorCode::InvalidArgument, "F needs at least k+1 vertices");
    // Remainder vertices go to X_2, X_k, X_1, X_{k+1}, then inward from both ends.
    std::vector<int> order;
    auto push = [&](int layer) {
        if (std::find(order.begin(), order.end(), layer) == order.end()) order.push_back(layer);
    };
    push(2);
    push(k);
    push(1);
    push(k + 1);
    for (int lo = 3, hi = k - 1; static_cast<int>(order.size()) < k + 1; ++lo, --hi) {
        if (lo <= k + 1) push(lo);
        if (hi >= 1) push(hi);
    }
    std::vector<int> sizes(k + 1, n / (k + 1));
    for (int i = 0; i < n % (k + 1); ++i) ++sizes[order[i] - 1];
    std::vector<std::vector<Vertex>> layers;
    Vertex next = 0;
    for (int s : sizes) layers.push_back(take_range(next, s));
    return layers;
}

Graph gen_F(int k, int n) {
    const auto layers = f_layers(k, n);
    std::vector<Edge> edges;
    make_clique(edges, layers.front());
    make_clique(edges, layers.back());
    for (std::size_t i = 0; i + 1 < layers.size(); ++i) join_all(edges, layers[i], layers[i + 1]);
    Graph g = Graph::build(n, edges);
    g.set_family({"F", {{"k", str(k)}, {"n", str(n)}}});
    return g;
}

std::vector<Edge> f_e1_edges(int k, int n) {
    std::vector<Edge> edges;
    make_clique(edges, f_layers(k, n).front());
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::vector<Vertex>> f_bip_blocks(int k, int n) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "F_bip needs k >= 1");
    if (n < k + 1) throw Error(ErrorCode::InvalidArgument, "F_bip needs n >= k+1");
    const int classes = k + 1;
    std::vector<int> sizes(2 * classes, n / classes);
    const int r = n % classes;
    // Extra vertices come in consecutive pairs (one per side), spread evenly around the cycle.
    for (int e = 0; e < r; ++e) {
        const int pos = e * classes / r;
        ++sizes[2 * pos];
        ++sizes[2 * pos + 1];
    }
    std::vector<std::vector<Vertex>> blocks(2 * classes);
    Vertex left = 0;
    Vertex right = n;
    for (int t = 0; t < 2 * classes; ++t)
        blocks[t] = t % 2 == 0 ? take_range(left, sizes[t]) : take_range(right, sizes[t]);
    return blocks;
}

Graph gen_F_bip(int k, int n) {
    const auto blocks = f_bip_blocks(k, n);
    std::vector<Edge> edges;
    const std::size_t len = blocks.size();
    for (std::size_t t = 0; t < len; ++t) join_all(edges, blocks[t], blocks[(t + 1) % len]);
    Bipartition bp;
    for (Vertex v = 0; v < n; ++v) {
        bp.left.push_back(v);
        bp.right.push_back(n + v);
    }
    Graph g = Graph::build(2 * n, edges, bp);
    g.set_family({"Fbip", {{"k", str(k)}, {"n", str(n)}}});
    return g;
}

std::vector<Edge> f_bip_e1_edges(int k, int n) {
    const auto blocks = f_bip_blocks(k, n);
    std::vector<Edge> edges;
    join_all(edges, blocks[0], blocks[1]);
    std::sort(edges.begin(), edges.end());
    return edges;
}

Graph gen_cycle_union(int k, int c, bool bipartite) {
    if (k < 1 || c < 1) throw Error(ErrorCode::InvalidArgument, "k and c must be positive");
    const int len = 2 * k + 2;
    const int n = len * c;
    if (n > kMaxVertices) throw Error(ErrorCode::GraphTooLarge, str(n) + " vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < c; ++i)
        for (int t = 0; t < len; ++t) edges.push_back(make_edge(i * len + t, i * len + (t + 1) % len));
    std::optional<Bipartition> bp;
    if (bipartite) {
        bp.emplace();
        for (Vertex v = 0; v < n; ++v) (v % 2 == 0 ? bp->left : bp->right).push_back(v);
    }
    Graph g = Graph::build(n, edges, bp);
    g.set_family({"cycles", {{"k", str(k)}, {"c", str(c)}}});
    return g;
}

Graph gen_random_min_degree(int n, int delta, bool bipartite, std::uint64_t seed) {
    if (n < 1 || delta < 0) throw Error(ErrorCode::InvalidArgument, "n must be positive and delta non-negative");
    const int total = bipartite ? 2 * n : n;
    if (total > kMaxVertices) throw Error(ErrorCode::GraphTooLarge, str(total) + " vertices");
    const int max_degree = bipartite ? n : n - 1;
    if (delta > max_degree)
        throw Error(ErrorCode::InfeasibleDegree,
                    "min degree " + str(delta) + " impossible (max " + str(max_degree) + ")");

    Rng rng = Rng(seed).substream("graph-gen");
    std::vector<VertexMask> rows(total, 0);
    auto allowed = [&](Vertex u, Vertex v) {
        if (u == v) return false;
        return !bipartite || ((u < n) != (v < n));
    };
    const double p = max_degree == 0 ? 0.0 : static_cast<double>(delta) / max_degree;
    for (Vertex u = 0; u < total; ++u)
        for (Vertex v = u + 1; v < total; ++v)
            if (allowed(u, v) && rng.bernoulli(p)) {
                rows[u] |= bit(v);
                rows[v] |= bit(u);
            }

    // Repair: top up deficient vertices, preferring partners that are also deficient.
    auto deg = [&](Vertex v) { return std::popcount(rows[v]); };
    for (Vertex u = 0; u < total; ++u) {
        while (deg(u) < delta) {
            std::vector<Vertex> preferred;
            std::vector<Vertex> others;
            for (Vertex v = 0; v < total; ++v) {
                if (!allowed(u, v) || ((rows[u] >> v) & 1U)) continue;
                (deg(v) < delta ? preferred : others).push_back(v);
            }
            const auto& pool = preferred.empty() ? others : preferred;
            const Vertex v = pool[rng.uniform(pool.size())];
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
    }

    std::vector<Edge> edges;
    for (Vertex u = 0; u < total; ++u)
        for (VertexMask m = rows[u] >> u >> 1 << u << 1; m; m &= m - 1)
            edges.push_back({u, std::countr_zero(m)});
    std::optional<Bipartition> bp;
    if (bipartite) {
        bp.emplace();
        for (Vertex v = 0; v < n; ++v) {
            bp->left.push_back(v);
            bp->right.push_back(n + v);
        }
    }
    Graph g = Graph::build(total, edges, bp);
    g.set_family({"random", {{"n", str(n)},
                             {"delta", str(delta)},
                             {"bipartite", bipartite ? "true" : "false"},
                             {"seed", std::to_string(seed)}}});
    return g;
}

}  // namespace kswitch
