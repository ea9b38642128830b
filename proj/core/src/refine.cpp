#include <algorithm>
#include <optional>
#include <stdexcept>

#include "kswitch/reconfig.hpp"

namespace kswitch {

namespace {

struct CycleStep {
    Matching before;
    Matching after;
    /// u_1..u_L with u_1u_2 in `before`.
    std::vector<Vertex> cycle;
};

CycleStep read_cycle_step(const Graph& g, const Matching& m, const SwitchStep& step, std::size_t length) {
    CycleStep cs{m, apply_step(g, m, step), {}};
    const SymDiffDecomposition d = symdiff_decompose(g.order(), cs.before, cs.after);
    if (!d.paths.empty() || d.cycles.size() != 1 || d.cycles.front().vertices.size() != length)
        throw Error(ErrorCode::PatternNotFound,
                    "support of the step is not a single " + std::to_string(length) + "-cycle");
    cs.cycle = d.cycles.front().vertices;
    return cs;
}

std::vector<SwitchStep> run_walks(const Graph& g, Matching current,
                                  const std::vector<std::vector<Vertex>>& walks) {
    std::vector<SwitchStep> out;
    for (const auto& w : walks) {
        out.push_back(cycle_switch(g, current, w));
        current = apply_step(g, current, out.back());
    }
    return out;
}

std::vector<SwitchStep> reversed_inverse(const std::vector<SwitchStep>& steps) {
    std::vector<SwitchStep> out;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back({it->added, it->removed});
    return out;
}

/// Split along a chord joining two cycle positions at odd distance (at least 3 apart).
std::optional<std::vector<SwitchStep>> split_on_even_chord(const Graph& g, const CycleStep& cs) {
    const auto& c = cs.cycle;
    const int len = static_cast<int>(c.size());
    for (int a = 0; a < len; ++a) {
        for (int b = a + 3; b <= a + len - 3 && b < len; b += 2) {
            if (!g.adjacent(c[a], c[b])) continue;
            // Position p (0-based, odd) is u_i with i even; the walk u_j .. u_i closes on the chord.
            const int even_end = a % 2 == 1 ? a : b;
            const int odd_end = a % 2 == 1 ? b : a;
            std::vector<Vertex> first;
            for (int t = odd_end;; t = (t + 1) % len) {
                first.push_back(c[t]);
                if (t == even_end) break;
            }
            std::vector<Vertex> second;
            for (int t = even_end;; t = (t + 1) % len) {
                second.push_back(c[t]);
                if (t == odd_end) break;
            }
            std::vector<SwitchStep> steps = run_walks(g, cs.before, {first, second});
            return steps;
        }
    }
    return std::nullopt;
}

/// Relabelings u'_t = c[(r + s*t) mod L] for all rotations r and directions s.
std::vector<std::vector<Vertex>> dihedral_labelings(const std::vector<Vertex>& c) {
    const int len = static_cast<int>(c.size());
    std::vector<std::vector<Vertex>> out;
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int r = 0; r < len; ++r) {
            std::vector<Vertex> u(len);
            for (int t = 0; t < len; ++t) u[t] = c[((reflect ? r - t : r + t) % len + len) % len];
            out.push_back(std::move(u));
        }
    }
    return out;
}

std::vector<Edge> common_edges(const Matching& a, const Matching& b) {
    std::vector<Edge> out;
    std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                          std::back_inserter(out));
    return out;
}

/// Try a detour pattern under every relabeling. `walks_for` returns the walk list for
/// labels u (0-based) and outside edge (x, y), or nullopt when adjacencies are missing.
template <class WalksFor>
std::optional<std::vector<SwitchStep>> search_pattern(const Graph& g, const CycleStep& cs, WalksFor walks_for) {
    const std::vector<Edge> shared = common_edges(cs.before, cs.after);
    for (const auto& u : dihedral_labelings(cs.cycle)) {
        // The labeling fixes which matching holds u_1u_2; run the pattern from that side.
        const bool from_before = cs.before.contains(make_edge(u[0], u[1]));
        const Matching& source = from_before ? cs.before : cs.after;
        const Matching& target = from_before ? cs.after : cs.before;
        for (const Edge& e : shared) {
            for (const auto& [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                const auto walks = walks_for(u, x, y);
                if (!walks) continue;
                std::vector<SwitchStep> steps = run_walks(g, source, *walks);
                Matching check = source;
                for (const SwitchStep& s : steps) check = apply_step(g, check, s);
                if (!(check == target)) throw std::logic_error("detour pattern did not reach the target");
                return from_before ? steps : reversed_inverse(steps);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<SwitchStep> refine_4_to_3(const Graph& g, const Matching& m, const SwitchStep& step) {
    if (step.size_class() <= 3) return {step};
    const CycleStep cs = read_cycle_step(g, m, step, 8);
    if (auto split = split_on_even_chord(g, cs)) return *split;
    // Outside edge xy with y ~ u1 and x ~ u2, u6.
    auto walks = [&](const std::vector<Vertex>& u, Vertex x, Vertex y)
        -> std::optional<std::vector<std::vector<Vertex>>> {
        if (!g.adjacent(y, u[0]) || !g.adjacent(x, u[1]) || !g.adjacent(x, u[5])) return std::nullopt;
        return std::vector<std::vector<Vertex>>{
            {u[0], u[1], x, y},
            {x, u[1], u[2], u[3], u[4], u[5]},
            {x, u[5], u[6], u[7], u[0], y},
        };
    };
    if (auto steps = search_pattern(g, cs, walks)) return *steps;
    throw Error(ErrorCode::PatternNotFound, "8-cycle has no even chord and no usable outside edge");
}

std::vector<SwitchStep> refine_3_to_2(const Graph& g, const Matching& m, const SwitchStep& step) {
    if (step.size_class() <= 2) return {step};
    const CycleStep cs = read_cycle_step(g, m, step, 6);
    if (auto split = split_on_even_chord(g, cs)) return *split;
    // Outside edge xy with x ~ u1, u5 and y ~ u2, u4.
    auto walks = [&](const std::vector<Vertex>& u, Vertex x, Vertex y)
        -> std::optional<std::vector<std::vector<Vertex>>> {
        if (!g.adjacent(x, u[0]) || !g.adjacent(x, u[4]) || !g.adjacent(y, u[1]) || !g.adjacent(y, u[3]))
            return std::nullopt;
        return std::vector<std::vector<Vertex>>{
            {u[0], u[1], y, x},
            {y, u[1], u[2], u[3]},
            {u[0], x, u[4], u[5]},
            {y, u[3], u[4], x},
        };
    };
    if (auto steps = search_pattern(g, cs, walks)) return *steps;
    throw Error(ErrorCode::PatternNotFound, "6-cycle has no even chord and no usable outside edge");
}

}  // namespace kswitch
