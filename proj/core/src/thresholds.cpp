#include "kswitch/thresholds.hpp"

#include <cmath>

#include "kswitch/errors.hpp"
#include "kswitch/generators.hpp"
#include "kswitch/rng.hpp"

namespace kswitch {

std::string_view to_string(Property p) {
    switch (p) {
        case Property::Connect: return "connect";
        case Property::Giant: return "giant";
        case Property::NoIso: return "noiso";
        case Property::Thaw: return "thaw";
        case Property::Cluster: return "cluster";
    }
    return "connect";
}

Property parse_property(std::string_view name) {
    for (Property p : {Property::Connect, Property::Giant, Property::NoIso, Property::Thaw, Property::Cluster})
        if (to_string(p) == name) return p;
    throw Error(ErrorCode::InvalidArgument, "unknown property '" + std::string(name) + "'");
}

bool ThresholdReport::holds(Property p) const {
    switch (p) {
        case Property::Connect: return connect;
        case Property::Giant: return giant;
        case Property::NoIso: return noiso;
        case Property::Thaw: return thaw;
        case Property::Cluster: return cluster;
    }
    return false;
}

ThresholdReport evaluate_thresholds(const SwitchGraph& h, const Graph& g, double c) {
    if (!(c > 1.0)) throw Error(ErrorCode::InvalidArgument, "c must exceed 1");
    ThresholdReport t;
    t.report = property_report(h);
    if (h.order() == 0) return t;
    const PropertyReport& r = t.report;
    const double omega = static_cast<double>(h.order());
    std::size_t largest = 0;
    for (std::size_t s : r.component_sizes) largest = std::max(largest, s);
    t.connect = r.connected;
    t.giant = static_cast<double>(largest) >= omega / c;
    t.noiso = r.isolated == 0;
    t.thaw = static_cast<double>(r.min_nonfrozen_edges) >= static_cast<double>(h.matching_size()) / c;
    const int n = g.is_bipartite() ? g.half_order() : g.order();
    t.cluster = std::log(static_cast<double>(r.num_components)) < static_cast<double>(n) * std::log(c);
    return t;
}

ThresholdReport evaluate_thresholds(const Graph& g, int k, Rational gamma, double c) {
    const SwitchGraph h = SwitchGraph::build(g, matching_size_for(g, gamma), k);
    return evaluate_thresholds(h, g, c);
}

namespace {

int min_degree(const Graph& g) { return degree_report(g).min_degree; }

bool violates(const Graph& g, int k, Rational gamma, Property prop, double c) {
    const SwitchGraph h = SwitchGraph::build(g, matching_size_for(g, gamma), k);
    return !evaluate_thresholds(h, g, c).holds(prop);
}

Graph graph_from_mask(int n, const std::vector<Edge>& pairs, std::uint64_t mask,
                      const std::optional<Bipartition>& parts) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    return Graph::build(n, edges, parts);
}

}  // namespace

std::vector<Graph> family_pool(int n, int k, bool bipartite) {
    std::vector<Graph> pool;
    auto attempt = [&](auto&& make) {
        try {
            pool.push_back(make());
        } catch (const Error&) {
        }
    };
    if (bipartite) {
        attempt([&] { return gen_F_bip(k, n); });
        attempt([&] { return gen_G_family_bip(k, 1, Rational(1), n); });
        if (n % (k + 1) == 0) attempt([&] { return gen_cycle_union(k, n / (k + 1), true); });
    } else {
        attempt([&] { return gen_F(k, n); });
        attempt([&] { return gen_G_family(k, 1, Rational(1), n); });
        if (n % (2 * k + 2) == 0) attempt([&] { return gen_cycle_union(k, n / (2 * k + 2)); });
    }
    return pool;
}

std::vector<ScanRow> scan_threshold(int n, int k, Rational gamma, Property prop, double c,
                                    bool bipartite, const ScanStrategy& strategy) {
    const int max_degree = bipartite ? n : n - 1;
    std::vector<ScanRow> rows;
    for (int d = 0; d <= max_degree; ++d) {
        ScanRow row;
        row.n = n;
        row.k = k;
        row.gamma = gamma;
        row.delta = d;
        row.property = prop;
        rows.push_back(row);
    }

    if (strategy.kind == ScanStrategy::Kind::Exhaustive) {
        if ((!bipartite && n > 6) || (bipartite && n > 4))
            throw Error(ErrorCode::InvalidArgument, "exhaustive scan limited to n <= 6 (or 4 per side)");
        std::vector<Edge> pairs;
        std::optional<Bipartition> parts;
        if (bipartite) {
            parts.emplace();
            for (Vertex v = 0; v < n; ++v) {
                parts->left.push_back(v);
                parts->right.push_back(n + v);
            }
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) pairs.push_back({u, n + v});
        } else {
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
        }
        const int order = bipartite ? 2 * n : n;
        const std::uint64_t total = std::uint64_t{1} << pairs.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(order, pairs, mask, parts);
            const int d = min_degree(g);
            bool pending = false;
            for (int x = 0; x <= d; ++x) pending = pending || !rows[x].witness_found;
            if (!pending) continue;
            if (!violates(g, k, gamma, prop, c)) continue;
            for (int x = 0; x <= d; ++x) {
                if (rows[x].witness_found) continue;
                rows[x].witness_found = true;
                rows[x].witness = g;
            }
        }
        return rows;
    }

    const Rng base = Rng(strategy.seed).substream("scan");
    for (ScanRow& row : rows) {
        for (const Graph& g : strategy.pool) {
            if (g.is_bipartite() != bipartite) continue;
            if ((bipartite ? g.half_order() : g.order()) != n) continue;
            if (min_degree(g) < row.delta) continue;
            if (violates(g, k, gamma, prop, c)) {
                row.witness_found = true;
                row.witness = g;
                break;
            }
        }
        for (int t = 0; t < strategy.trials && !row.witness_found; ++t) {
            const std::uint64_t seed = base.substream(static_cast<std::uint64_t>(row.delta) * 1'000'003ULL + t).seed();
            const Graph g = gen_random_min_degree(n, row.delta, bipartite, seed);
            if (violates(g, k, gamma, prop, c)) {
                row.witness_found = true;
                row.witness = g;
            }
        }
    }
    return rows;
}

}  // namespace kswitch
