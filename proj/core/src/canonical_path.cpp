#include <algorithm>
#include <stdexcept>

#include "kswitch/chain.hpp"
#include "kswitch/errors.hpp"

namespace kswitch {

namespace {

/// Walks one alternating cycle of S xor T with the representative/misleading machine.
class CycleRouter {
public:
    CycleRouter(const Graph& g, Matching& current, CanonicalPath& out, const std::vector<Vertex>& cycle)
        : g_(g), cur_(current), out_(out), c_(cycle), q_(static_cast<int>(cycle.size()) / 2) {}

    void run() {
        int k = 1;
        bool misleading = false;
        Vertex x = -1;
        Vertex y = -1;
        while (misleading || k < q_) {
            if (!misleading) {
                int best = 0;
                for (int l = 3; l >= 1; --l) {
                    if (k + l <= q_ && g_.adjacent(v(2 * (k + l)), v(1))) {
                        best = l;
                        break;
                    }
                }
                if (best > 0) {
                    std::vector<Vertex> cyc{v(1)};
                    for (int i = 2 * k; i <= 2 * (k + best); ++i) cyc.push_back(v(i));
                    apply(cyc, "1");
                    k += best;
                    continue;
                }
                std::vector<Vertex> cyc{v(1)};
                for (int i = 2 * k; i <= 2 * k + 4; ++i) cyc.push_back(v(i));
                const auto [xp, yp] = outside_edge(cyc, v(2 * k + 4));
                cyc.push_back(yp);
                cyc.push_back(xp);
                apply(cyc, "2");
                k += 2;
                misleading = true;
                x = xp;
                y = yp;
                continue;
            }

            if (2 * k + 4 > 2 * q_) stuck("misleading state too close to the end of the cycle");
            if (x == v(2 * k + 4) && y == v(2 * k + 3)) {
                apply({v(2 * k + 3), v(2 * k), v(2 * k + 1), v(2 * k + 2)}, "3");
                k += 2;
                misleading = false;
                continue;
            }
            std::vector<Vertex> p;
            int l = 0;
            std::string label;
            if (x == v(2 * k + 3) && y == v(2 * k + 4)) {
                p = {v(1), v(2 * k + 3), v(2 * k + 2), v(2 * k + 1), v(2 * k), v(2 * k + 4)};
                l = 2;
                label = "4";
            } else if (x == v(2 * k + 1) && y == v(2 * k + 2)) {
                p = {v(1), v(2 * k + 1), v(2 * k), v(2 * k + 2), v(2 * k + 3), v(2 * k + 4)};
                l = 2;
                label = "5";
            } else {
                p = {v(1), x, y, v(2 * k), v(2 * k + 1), v(2 * k + 2)};
                l = 1;
                label = "6";
            }
            int m = -1;
            for (int t = 1; t >= 0; --t) {
                if (k + l + t <= q_ && g_.adjacent(v(2 * (k + l + t)), v(1))) {
                    m = t;
                    break;
                }
            }
            if (m >= 0) {
                std::vector<Vertex> cyc = p;
                if (m == 1) {
                    cyc.push_back(v(2 * (k + l) + 1));
                    cyc.push_back(v(2 * (k + l) + 2));
                }
                apply(cyc, label + "a");
                k += l + m;
                misleading = false;
                continue;
            }
            const auto [xp, yp] = outside_edge(p, v(2 * (k + l)));
            p.push_back(yp);
            p.push_back(xp);
            apply(p, label + "b");
            k += l;
            x = xp;
            y = yp;
        }
    }

private:
    /// 1-based label on the cycle.
    Vertex v(int i) const { return c_[i - 1]; }

    [[noreturn]] void stuck(const std::string& why) const { throw Error(ErrorCode::CaseLadderStuck, why); }

    /// Smallest edge x'y' of the current matching avoiding `used`, with x' ~ v_1 and y' ~ tail.
    std::pair<Vertex, Vertex> outside_edge(const std::vector<Vertex>& used, Vertex tail) const {
        VertexMask blocked = 0;
        for (Vertex u : used) blocked |= bit(u);
        for (const Edge& e : cur_.edges()) {
            if ((blocked & (bit(e.u) | bit(e.v))) != 0) continue;
            for (const auto& [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
                if (g_.adjacent(a, v(1)) && g_.adjacent(b, tail)) return {a, b};
        }
        stuck("no outside edge joins v1 to " + std::to_string(tail));
    }

    void apply(const std::vector<Vertex>& cyc, const std::string& label) {
        SwitchStep step;
        try {
            step = cycle_switch(g_, cur_, cyc);
        } catch (const Error& e) {
            stuck("case " + label + " produced an invalid switch: " + e.what());
        }
        cur_ = apply_step(g_, cur_, step);
        out_.path.steps.push_back(std::move(step));
        out_.cases.push_back(label);
    }

    const Graph& g_;
    Matching& cur_;
    CanonicalPath& out_;
    const std::vector<Vertex>& c_;
    int q_;
};

}  // namespace

CanonicalPath canonical_path(const Graph& g, const Matching& s, const Matching& t) {
    if (!is_perfect(g, s) || !is_perfect(g, t))
        throw Error(ErrorCode::InvalidArgument, "canonical paths join perfect matchings");
    CanonicalPath out;
    out.path.start = s;
    out.path.end = t;
    out.path.k = 4;
    const SymDiffDecomposition dec = symdiff_decompose(g.order(), s, t);
    Matching current = s;
    // Cycles arrive ordered by smallest vertex, each starting there along its S-edge.
    for (const SymDiffComponent& c : dec.cycles) CycleRouter(g, current, out, c.vertices).run();
    if (!(current == t)) throw std::logic_error("canonical path did not reach its target");
    return out;
}

}  // namespace kswitch
