#include "kswitch/reconfig.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kswitch {

namespace {

using Mates = std::vector<Vertex>;

SwitchStep make_step(std::vector<Edge> removed, std::vector<Edge> added) {
    for (Edge& e : removed) e = make_edge(e.u, e.v);
    for (Edge& e : added) e = make_edge(e.u, e.v);
    std::sort(removed.begin(), removed.end());
    std::sort(added.begin(), added.end());
    return {std::move(removed), std::move(added)};
}

void apply_to_mates(Mates& mate, const SwitchStep& step) {
    for (const Edge& e : step.removed) mate[e.u] = mate[e.v] = -1;
    for (const Edge& e : step.added) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
}

SwitchStep invert(const SwitchStep& s) { return {s.added, s.removed}; }

int mate_hamming(const Mates& a, const Mates& b) {
    int d = 0;
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[v] > static_cast<Vertex>(v) && b[v] != a[v]) ++d;
        if (b[v] > static_cast<Vertex>(v) && a[v] != b[v]) ++d;
    }
    return d;
}

/// A symmetric-difference component read in one direction, as a cyclic or linear sequence.
struct Strand {
    std::vector<Vertex> seq;
    bool closed = false;

    std::size_t len() const { return seq.size(); }
    /// Vertices s[i], ..., s[i+count-1] if they exist (wrapping for cycles).
    bool window(std::size_t i, std::size_t count, std::vector<Vertex>& out) const {
        if (count > seq.size()) return false;
        if (!closed && i + count > seq.size()) return false;
        out.resize(count);
        for (std::size_t t = 0; t < count; ++t) out[t] = seq[(i + t) % seq.size()];
        return true;
    }
};

std::vector<Strand> strands_of(const SymDiffComponent& c) {
    Strand fwd{c.vertices, c.closed};
    Strand bwd{std::vector<Vertex>(c.vertices.rbegin(), c.vertices.rend()), c.closed};
    return {fwd, bwd};
}

/// All components, ordered by smallest vertex.
std::vector<SymDiffComponent> ordered_components(const SymDiffDecomposition& d) {
    std::vector<SymDiffComponent> all = d.cycles;
    all.insert(all.end(), d.paths.begin(), d.paths.end());
    std::stable_sort(all.begin(), all.end(), [](const SymDiffComponent& a, const SymDiffComponent& b) {
        return *std::min_element(a.vertices.begin(), a.vertices.end()) <
               *std::min_element(b.vertices.begin(), b.vertices.end());
    });
    return all;
}

/// Moves on side A (the matching being modified) towards side B.
class Ladder {
public:
    Ladder(const Graph& g, const Mates& a, const Mates& b) : g_(g), a_(a), b_(b) {
        const SymDiffDecomposition d = symdiff_decompose(a_, b_);
        comps_ = ordered_components(d);
    }

    /// An edge of B whose ends are both free in A replaces an A-only edge.
    std::optional<SwitchStep> isolated_edge() const {
        const int n = g_.order();
        for (Vertex x = 0; x < n; ++x) {
            const Vertex y = b_[x];
            if (y <= x || a_[x] >= 0 || a_[y] >= 0) continue;
            for (Vertex u = 0; u < n; ++u) {
                const Vertex v = a_[u];
                if (v > u && b_[u] != v) return make_step({{u, v}}, {{x, y}});
            }
        }
        return std::nullopt;
    }

    /// Switch a whole even path of length at most 6.
    std::optional<SwitchStep> even_path() const {
        for (const SymDiffComponent& c : comps_) {
            if (c.closed) continue;
            const int edges = c.edge_count();
            if (edges % 2 != 0 || edges > 6) continue;
            std::vector<Vertex> w = c.vertices;
            if (!in_a(w[0], w[1])) std::reverse(w.begin(), w.end());
            std::vector<Edge> removed, added;
            for (std::size_t t = 0; t + 1 < w.size(); ++t)
                (t % 2 == 0 ? removed : added).push_back({w[t], w[t + 1]});
            return make_step(std::move(removed), std::move(added));
        }
        return std::nullopt;
    }

    /// Alternating subpath u1..u_{2p} (u1u2 in A, p in 2..4) whose ends are adjacent.
    std::optional<SwitchStep> closing_subpath() const {
        std::vector<Vertex> u;
        for (const SymDiffComponent& c : comps_) {
            for (int p = 4; p >= 2; --p) {
                for (const Strand& s : strands_of(c)) {
                    for (std::size_t i = 0; i < s.len(); ++i) {
                        if (!s.window(i, 2 * p, u)) continue;
                        if (!in_a(u[0], u[1])) continue;
                        if (!g_.adjacent(u[0], u[2 * p - 1])) continue;
                        std::vector<Edge> removed, added;
                        for (int t = 0; t + 1 < 2 * p; ++t)
                            (t % 2 == 0 ? removed : added).push_back({u[t], u[t + 1]});
                        added.push_back({u[2 * p - 1], u[0]});
                        return make_step(std::move(removed), std::move(added));
                    }
                }
            }
        }
        return std::nullopt;
    }

    /// Length-5 subpath u1..u6: absorb a free neighbour of u1 or u6, else route through
    /// an A-edge xy with x ~ u6 and y ~ u1.
    std::optional<SwitchStep> five_path() const {
        std::vector<Vertex> u;
        const int n = g_.order();
        for (const SymDiffComponent& c : comps_) {
            for (const Strand& s : strands_of(c)) {
                for (std::size_t i = 0; i < s.len(); ++i) {
                    if (!s.window(i, 6, u)) continue;
                    if (!in_a(u[0], u[1])) continue;
                    const std::vector<Edge> core_removed{{u[0], u[1]}, {u[2], u[3]}, {u[4], u[5]}};
                    for (Vertex y : g_.neighbors(u[0])) {
                        if (a_[y] >= 0) continue;
                        return make_step(core_removed, {{y, u[0]}, {u[1], u[2]}, {u[3], u[4]}});
                    }
                    for (Vertex x : g_.neighbors(u[5])) {
                        if (a_[x] >= 0) continue;
                        return make_step(core_removed, {{u[1], u[2]}, {u[3], u[4]}, {u[5], x}});
                    }
                    VertexMask used = 0;
                    for (Vertex v : u) used |= bit(v);
                    for (Vertex x = 0; x < n; ++x) {
                        if ((used >> x) & 1U) continue;
                        const Vertex y = a_[x];
                        if (y < 0 || !g_.adjacent(x, u[5]) || !g_.adjacent(y, u[0])) continue;
                        std::vector<Edge> removed = core_removed;
                        removed.push_back({x, y});
                        return make_step(std::move(removed),
                                         {{u[1], u[2]}, {u[3], u[4]}, {u[5], x}, {y, u[0]}});
                    }
                }
            }
        }
        return std::nullopt;
    }

    /// Pair an A-B-A path u1u2u3u4 with a B-A-B path v1v2v3v4 and switch both at once.
    std::optional<SwitchStep> paired_paths() const {
        const SymDiffComponent* p = nullptr;
        const SymDiffComponent* q = nullptr;
        for (const SymDiffComponent& c : comps_) {
            if (c.closed || c.edge_count() != 3) continue;
            const bool a_first = in_a(c.vertices[0], c.vertices[1]);
            if (a_first && !p) p = &c;
            if (!a_first && !q) q = &c;
        }
        if (!p || !q) return std::nullopt;
        const auto& u = p->vertices;
        const auto& v = q->vertices;
        return make_step({{u[0], u[1]}, {u[2], u[3]}, {v[1], v[2]}},
                         {{u[1], u[2]}, {v[0], v[1]}, {v[2], v[3]}});
    }

private:
    bool in_a(Vertex x, Vertex y) const { return a_[x] == y; }

    const Graph& g_;
    const Mates& a_;
    const Mates& b_;
    std::vector<SymDiffComponent> comps_;
};

std::string describe(const Mates& m) {
    std::string s = "{";
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v] > static_cast<Vertex>(v)) s += std::to_string(v) + "-" + std::to_string(m[v]) + " ";
    return s + "}";
}

}  // namespace

SwitchStep step_between(const Matching& a, const Matching& b) {
    std::vector<Edge> removed;
    std::vector<Edge> added;
    std::set_difference(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                        std::back_inserter(removed));
    std::set_difference(b.edges().begin(), b.edges().end(), a.edges().begin(), a.edges().end(),
                        std::back_inserter(added));
    return {std::move(removed), std::move(added)};
}

Matching apply_step(const Graph& g, const Matching& m, const SwitchStep& step) {
    std::vector<Edge> edges = m.edges();
    for (const Edge& e : step.removed) {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || !(*it == e))
            throw Error(ErrorCode::InvalidStep,
                        "removed edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not present");
        edges.erase(it);
    }
    for (const Edge& e : step.added) {
        if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v))
            throw Error(ErrorCode::InvalidStep,
                        "added pair (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
        edges.push_back(e);
    }
    try {
        return Matching::from_edges(std::move(edges));
    } catch (const Error& err) {
        throw Error(ErrorCode::InvalidStep, err.what());
    }
}

SwitchStep cycle_switch(const Graph& g, const Matching& m, const std::vector<Vertex>& cycle) {
    const std::size_t len = cycle.size();
    if (len < 4 || len % 2 != 0) throw Error(ErrorCode::InvalidStep, "cycle length must be even and >= 4");
    VertexMask seen = 0;
    for (Vertex v : cycle) {
        if ((seen >> v) & 1U) throw Error(ErrorCode::InvalidStep, "cycle repeats a vertex");
        seen |= bit(v);
    }
    std::vector<Edge> even, odd;
    for (std::size_t t = 0; t < len; ++t) {
        const Edge e = make_edge(cycle[t], cycle[(t + 1) % len]);
        if (!g.adjacent(e.u, e.v)) throw Error(ErrorCode::InvalidStep, "cycle uses a non-edge");
        (t % 2 == 0 ? even : odd).push_back(e);
    }
    auto all_in = [&](const std::vector<Edge>& es) {
        return std::all_of(es.begin(), es.end(), [&](const Edge& e) { return m.contains(e); });
    };
    if (all_in(even)) return make_step(std::move(even), std::move(odd));
    if (all_in(odd)) return make_step(std::move(odd), std::move(even));
    throw Error(ErrorCode::InvalidStep, "cycle does not alternate with the matching");
}

bool four_switch_hypothesis(const Graph& g, int matching_size) {
    const int s = ore_sum(g);
    if (g.is_bipartite()) return s >= matching_size;
    return s >= 2 * matching_size + 1;
}

bool refine_4_to_3_hypothesis(const Graph& g) {
    if (g.is_bipartite()) return ore_sum(g) >= g.half_order() + 1;
    return ore_sum(g) >= g.order() + 3;
}

bool refine_3_to_2_hypothesis(const Graph& g) {
    const int n = g.is_bipartite() ? g.half_order() : g.order();
    return ore_sum(g) >= (4 * n) / 3 + 1;
}

bool k_switch_degree_hypothesis(const Graph& g, int k) {
    const int delta = degree_report(g).min_degree;
    const int n = g.is_bipartite() ? g.half_order() : g.order();
    if (k == 2) return delta >= (2 * n) / 3 + 1;
    if (k == 3) return g.is_bipartite() ? delta >= n / 2 + 1 : 2 * delta >= n + 4;
    return four_switch_hypothesis(g, g.is_bipartite() ? n : n / 2);
}

ReconfigPath four_switch_path(const Graph& g, const Matching& from, const Matching& to) {
    if (from.size() != to.size())
        throw Error(ErrorCode::InvalidArgument, "matchings have different sizes");
    for (const Matching* m : {&from, &to})
        for (const Edge& e : m->edges())
            if (e.v >= g.order() || !g.adjacent(e.u, e.v))
                throw Error(ErrorCode::InvalidMatching, "matching edge missing from graph");

    const int n = g.order();
    Mates front = from.mates(n);
    Mates back = to.mates(n);
    std::vector<SwitchStep> front_steps;
    std::vector<SwitchStep> back_steps;

    using Finder = std::optional<SwitchStep> (Ladder::*)() const;
    static constexpr Finder kCases[] = {&Ladder::isolated_edge, &Ladder::even_path, &Ladder::closing_subpath,
                                        &Ladder::five_path, &Ladder::paired_paths};

    int dist = mate_hamming(front, back);
    while (dist > 0) {
        std::optional<SwitchStep> step;
        int side = 0;
        {
            const Ladder ladders[2] = {Ladder(g, front, back), Ladder(g, back, front)};
            for (Finder find : kCases) {
                for (side = 0; side < 2 && !step; ++side) step = (ladders[side].*find)();
                if (step) break;
            }
        }
        if (!step)
            throw NoMoveFoundError("stuck between " + describe(front) + " and " + describe(back),
                                   matching_from_mates(front), matching_from_mates(back));
        --side;
        apply_to_mates(side == 0 ? front : back, *step);
        const int next = mate_hamming(front, back);
        if (next >= dist) throw std::logic_error("switch did not shrink the symmetric difference");
        dist = next;
        (side == 0 ? front_steps : back_steps).push_back(std::move(*step));
    }

    ReconfigPath path;
    path.start = from;
    path.end = to;
    path.k = 4;
    path.steps = std::move(front_steps);
    for (auto it = back_steps.rbegin(); it != back_steps.rend(); ++it) path.steps.push_back(invert(*it));
    return path;
}

ReconfigPath k_switch_path(const Graph& g, const Matching& from, const Matching& to, int k) {
    if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
    ReconfigPath coarse = four_switch_path(g, from, to);
    if (k >= 4) return coarse;

    ReconfigPath path;
    path.start = from;
    path.end = to;
    path.k = k;
    Matching current = from;
    auto emit = [&](const SwitchStep& s) {
        current = apply_step(g, current, s);
        path.steps.push_back(s);
    };
    for (const SwitchStep& step : coarse.steps) {
        if (step.size_class() <= k) {
            emit(step);
            continue;
        }
        std::vector<SwitchStep> pieces = step.size_class() >= 4 ? refine_4_to_3(g, current, step)
                                                                  : std::vector<SwitchStep>{step};
        for (const SwitchStep& piece : pieces) {
            if (piece.size_class() <= k) {
                emit(piece);
                continue;
            }
            for (const SwitchStep& small : refine_3_to_2(g, current, piece)) emit(small);
        }
    }
    return path;
}

std::string_view to_string(Violation v) {
    switch (v) {
        case Violation::None: return "None";
        case Violation::StartMismatch: return "StartMismatch";
        case Violation::RemovedNotPresent: return "RemovedNotPresent";
        case Violation::NonEdge: return "NonEdge";
        case Violation::NotAMatching: return "NotAMatching";
        case Violation::SizeChanged: return "SizeChanged";
        case Violation::ExceedsK: return "ExceedsK";
        case Violation::EmptyStep: return "EmptyStep";
        case Violation::EndpointMismatch: return "EndpointMismatch";
    }
    return "None";
}

PathCheck validate_path(const Graph& g, const ReconfigPath& path) {
    auto fail = [](Violation v, int step, std::string msg) {
        return PathCheck{false, v, step, std::move(msg)};
    };
    for (const Edge& e : path.start.edges())
        if (e.v >= g.order() || !g.adjacent(e.u, e.v))
            return fail(Violation::StartMismatch, -1, "start uses a non-edge");

    std::vector<Vertex> mate = path.start.mates(g.order());
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const SwitchStep& s = path.steps[i];
        const int idx = static_cast<int>(i);
        if (s.removed.empty() && s.added.empty()) return fail(Violation::EmptyStep, idx, "empty step");
        if (s.removed.size() != s.added.size())
            return fail(Violation::SizeChanged, idx, "step changes the matching size");
        if (s.size_class() > path.k)
            return fail(Violation::ExceedsK, idx, std::to_string(s.size_class()) + "-switch exceeds k");
        for (const Edge& e : s.removed) {
            if (e.u < 0 || e.v >= g.order() || mate[e.u] != e.v)
                return fail(Violation::RemovedNotPresent, idx,
                            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in matching");
            mate[e.u] = mate[e.v] = -1;
        }
        for (const Edge& e : s.added) {
            if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v))
                return fail(Violation::NonEdge, idx,
                            "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
            if (mate[e.u] >= 0 || mate[e.v] >= 0)
                return fail(Violation::NotAMatching, idx, "added edges overlap");
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
    }
    if (!(matching_from_mates(mate) == path.end))
        return fail(Violation::EndpointMismatch, static_cast<int>(path.steps.size()) - 1,
                    "final matching differs from the declared end");
    return {};
}

}  // namespace kswitch
