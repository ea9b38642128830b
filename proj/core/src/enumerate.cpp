#include "kswitch/enumerate.hpp"

#include <bit>
#include <unordered_map>

#include "kswitch/errors.hpp"

namespace kswitch {

namespace {

class MatchingWalker {
public:
    MatchingWalker(const Graph& g, const std::function<bool(const std::vector<Edge>&)>& visit)
        : g_(g), visit_(visit) {}

    bool run(VertexMask avail, int remaining) {
        if (remaining == 0) return visit_(stack_);
        const int free = std::popcount(avail);
        if (free < 2 * remaining) return true;
        const Vertex u = std::countr_zero(avail);
        const VertexMask rest = avail & ~bit(u);
        for (VertexMask m = g_.neighbor_mask(u) & rest; m; m &= m - 1) {
            const Vertex w = std::countr_zero(m);
            stack_.push_back({u, w});
            const bool go_on = run(rest & ~bit(w), remaining - 1);
            stack_.pop_back();
            if (!go_on) return false;
        }
        if (free - 1 >= 2 * remaining) return run(rest, remaining);
        return true;
    }

private:
    const Graph& g_;
    const std::function<bool(const std::vector<Edge>&)>& visit_;
    std::vector<Edge> stack_;
};

struct MemoKey {
    VertexMask avail;
    int remaining;
    bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
        return std::hash<std::uint64_t>{}(k.avail * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k.remaining));
    }
};

class MatchingCounter {
public:
    explicit MatchingCounter(const Graph& g) : g_(g) {}

    std::uint64_t count(VertexMask avail, int remaining) {
        if (remaining == 0) return 1;
        const int free = std::popcount(avail);
        if (free < 2 * remaining) return 0;
        const MemoKey key{avail, remaining};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const Vertex u = std::countr_zero(avail);
        const VertexMask rest = avail & ~bit(u);
        std::uint64_t total = 0;
        for (VertexMask m = g_.neighbor_mask(u) & rest; m; m &= m - 1)
            total += count(rest & ~bit(std::countr_zero(m)), remaining - 1);
        if (free - 1 >= 2 * remaining) total += count(rest, remaining);
        memo_.emplace(key, total);
        return total;
    }

private:
    const Graph& g_;
    std::unordered_map<MemoKey, std::uint64_t, MemoHash> memo_;
};

}  // namespace

void for_each_matching(const Graph& g, int size,
                       const std::function<bool(const std::vector<Edge>&)>& visit) {
    if (size < 0 || 2 * size > g.order()) return;
    MatchingWalker walker(g, visit);
    walker.run(g.all_vertices(), size);
}

std::vector<Matching> enumerate_matchings(const Graph& g, int size, std::uint64_t cap) {
    std::vector<Matching> out;
    for_each_matching(g, size, [&](const std::vector<Edge>& edges) {
        if (out.size() >= cap)
            throw Error(ErrorCode::EnumerationBudgetExceeded,
                        "more than " + std::to_string(cap) + " matchings of size " + std::to_string(size));
        out.push_back(Matching::from_edges(edges));
        return true;
    });
    return out;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::uint64_t cap) {
    if (g.order() % 2 != 0) return {};
    return enumerate_matchings(g, g.order() / 2, cap);
}

std::uint64_t count_matchings(const Graph& g, int size) {
    if (size < 0 || 2 * size > g.order()) return 0;
    MatchingCounter counter(g);
    return counter.count(g.all_vertices(), size);
}

std::uint64_t permanent_01(const std::vector<VertexMask>& rows, int size) {
    if (size == 0) return 1;
    if (size > 20) throw Error(ErrorCode::GraphTooLarge, "permanent size " + std::to_string(size));
    __extension__ typedef __int128 wide_int;
    std::vector<std::int64_t> sums(size, 0);
    wide_int total = 0;
    std::uint64_t gray = 0;
    const std::uint64_t limit = std::uint64_t{1} << size;
    for (std::uint64_t step = 1; step < limit; ++step) {
        const int col = std::countr_zero(step);
        const bool added = ((gray >> col) & 1U) == 0;
        gray ^= std::uint64_t{1} << col;
        for (int i = 0; i < size; ++i)
            if ((rows[i] >> col) & 1U) sums[i] += added ? 1 : -1;
        wide_int prod = 1;
        for (int i = 0; i < size && prod != 0; ++i) prod *= sums[i];
        // Sign (-1)^(size - |S|).
        if ((size - std::popcount(gray)) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return static_cast<std::uint64_t>(total);
}

std::uint64_t count_perfect(const Graph& g) {
    if (g.order() % 2 != 0) return 0;
    if (g.is_bipartite() && g.half_order() <= 20) {
        const Bipartition& bp = g.bipartition();
        const int h = g.half_order();
        std::vector<VertexMask> rows(h, 0);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j)
                if (g.adjacent(bp.left[i], bp.right[j])) rows[i] |= VertexMask{1} << j;
        return permanent_01(rows, h);
    }
    return count_matchings(g, g.order() / 2);
}

InjectionImage near_perfect_injection(const Graph& g, const Matching& near) {
    const VertexMask exposed = g.all_vertices() & ~near.matched();
    if (std::popcount(exposed) != 2)
        throw Error(ErrorCode::InvalidArgument, "matching must expose exactly two vertices");
    for (const Edge& e : near.edges())
        if (!g.adjacent(e.u, e.v)) throw Error(ErrorCode::InvalidMatching, "edge not in graph");
    const Vertex u = std::countr_zero(exposed);
    const Vertex v = std::countr_zero(exposed & ~bit(u));
    std::vector<Edge> edges = near.edges();
    if (g.adjacent(u, v)) {
        edges.push_back({u, v});
        return {{u, v}, Matching::from_edges(std::move(edges))};
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge e = edges[i];
        for (const auto& [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (g.adjacent(x, u) && g.adjacent(y, v)) {
                edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
                edges.push_back(make_edge(x, u));
                edges.push_back(make_edge(y, v));
                return {{u, v}, Matching::from_edges(std::move(edges))};
            }
        }
    }
    throw Error(ErrorCode::NoAugmentingEdge,
                "no edge xy with x~" + std::to_string(u) + " and y~" + std::to_string(v));
}

}  // namespace kswitch
