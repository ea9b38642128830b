#include "kswitch/instances.hpp"

#include <algorithm>
#include <numeric>

#include "kswitch/errors.hpp"
#include "kswitch/rng.hpp"

namespace kswitch {

namespace {

void shuffle(std::vector<Vertex>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.uniform(i)]);
}

bool hypothesis(const Graph& g, int cycle_length) {
    return cycle_length == 8 ? refine_4_to_3_hypothesis(g) : refine_3_to_2_hypothesis(g);
}

}  // namespace

RefineInstance gen_refine_instance(const RefineInstanceOptions& opts, std::uint64_t seed) {
    const int len = opts.cycle_length;
    if (len != 6 && len != 8) throw Error(ErrorCode::InvalidArgument, "cycle length must be 6 or 8");
    const int total = opts.bipartite ? 2 * opts.n : opts.n;
    if (total % 2 != 0) throw Error(ErrorCode::OddVertexCount, "instance needs an even order");
    if (total > kMaxVertices) throw Error(ErrorCode::GraphTooLarge, "instance too large");
    if ((opts.bipartite ? total : opts.n) < len) throw Error(ErrorCode::InvalidArgument, "host too small for the cycle");

    Rng rng = Rng(seed).substream("graph-gen");
    const int half = total / 2;

    // Cycle and matching as a list of pairs (pair i = positions 2i, 2i+1); bipartite
    // hosts put the first vertex of every pair on the left side.
    std::vector<Vertex> left(half), right(half), all(total);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), half);
    std::iota(all.begin(), all.end(), 0);
    std::vector<Vertex> order;
    if (opts.bipartite) {
        shuffle(left, rng);
        shuffle(right, rng);
        for (int i = 0; i < half; ++i) {
            order.push_back(left[i]);
            order.push_back(right[i]);
        }
    } else {
        shuffle(all, rng);
        order = all;
    }
    std::vector<Vertex> cycle(order.begin(), order.begin() + len);

    auto crossing = [&](Vertex u, Vertex v) { return !opts.bipartite || ((u < half) != (v < half)); };
    std::vector<VertexMask> rows(total, 0);
    for (Vertex u = 0; u < total; ++u)
        for (Vertex v = 0; v < total; ++v)
            if (u != v && crossing(u, v)) rows[u] |= bit(v);
    auto drop = [&](Vertex u, Vertex v) {
        rows[u] &= ~bit(v);
        rows[v] &= ~bit(u);
    };
    if (opts.chordless)
        for (int a = 0; a < len; ++a)
            for (int b = a + 3; b < len; b += 2)
                if (b - a <= len - 3) drop(cycle[a], cycle[b]);

    std::optional<Bipartition> parts;
    if (opts.bipartite) {
        parts.emplace();
        for (Vertex v = 0; v < half; ++v) {
            parts->left.push_back(v);
            parts->right.push_back(half + v);
        }
    }
    auto build = [&]() {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < total; ++u)
            for (Vertex v = u + 1; v < total; ++v)
                if ((rows[u] >> v) & 1U) edges.push_back({u, v});
        return Graph::build(total, edges, parts);
    };

    Graph g = build();
    if (!hypothesis(g, len))
        throw Error(ErrorCode::InfeasibleDegree, "host violates the refinement hypothesis before deletions");

    std::vector<Edge> keep;
    for (int i = 0; i < total; i += 2) keep.push_back(make_edge(order[i], order[i + 1]));
    for (int i = 0; i < len; ++i) keep.push_back(make_edge(cycle[i], cycle[(i + 1) % len]));
    std::sort(keep.begin(), keep.end());

    std::vector<Edge> candidates;
    for (const Edge& e : g.edges())
        if (!std::binary_search(keep.begin(), keep.end(), e)) candidates.push_back(e);
    for (int t = 0; t < opts.deletions && !candidates.empty(); ++t) {
        const std::size_t pick = rng.uniform(candidates.size());
        const Edge e = candidates[pick];
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
        drop(e.u, e.v);
        Graph trial = build();
        if (hypothesis(trial, len)) {
            g = std::move(trial);
        } else {
            rows[e.u] |= bit(e.v);
            rows[e.v] |= bit(e.u);
        }
    }

    RefineInstance out{std::move(g), {}, {}, cycle, opts.chordless};
    std::vector<Edge> matched;
    for (int i = 0; i < total; i += 2) matched.push_back({order[i], order[i + 1]});
    out.matching = Matching::from_edges(out.graph, matched);
    out.step = cycle_switch(out.graph, out.matching, cycle);
    out.graph.set_family({"refine", {{"cycle", std::to_string(len)},
                                     {"n", std::to_string(opts.n)},
                                     {"bipartite", opts.bipartite ? "true" : "false"},
                                     {"chordless", opts.chordless ? "true" : "false"},
                                     {"seed", std::to_string(seed)}}});
    return out;
}

}  // namespace kswitch
