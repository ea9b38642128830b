#include "kswitch/io.hpp"

#include <algorithm>

#include "kswitch/errors.hpp"

namespace kswitch {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

Json edge_list(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

std::vector<Edge> read_edges(const Json& j) {
    if (!j.is_array()) parse_fail("edge list must be an array");
    std::vector<Edge> out;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2) parse_fail("edge must be a pair");
        out.push_back({as_int(e[0], "vertex"), as_int(e[1], "vertex")});
    }
    return out;
}

std::vector<Vertex> read_vertices(const Json& j) {
    if (!j.is_array()) parse_fail("vertex list must be an array");
    std::vector<Vertex> out;
    for (const Json& v : j) out.push_back(as_int(v, "vertex"));
    return out;
}

}  // namespace

Json to_json(const Graph& g) {
    Json j;
    j["n"] = g.order();
    j["edges"] = edge_list(g.edges());
    if (g.is_bipartite()) j["bipartition"] = {g.bipartition().left, g.bipartition().right};
    if (g.family()) {
        Json params = Json::object();
        for (const auto& [k, v] : g.family()->params) params[k] = v;
        j["family"] = {{"name", g.family()->name}, {"params", params}};
    }
    return j;
}

Graph graph_from_json(const Json& j) {
    const int n = as_int(field(j, "n"), "n");
    const std::vector<Edge> edges = read_edges(field(j, "edges"));
    std::optional<Bipartition> parts;
    if (j.contains("bipartition") && !j.at("bipartition").is_null()) {
        const Json& b = j.at("bipartition");
        if (!b.is_array() || b.size() != 2) parse_fail("bipartition must hold two vertex lists");
        parts = Bipartition{read_vertices(b[0]), read_vertices(b[1])};
    }
    Graph g = Graph::build(n, edges, parts);
    if (j.contains("family")) {
        const Json& f = j.at("family");
        FamilyInfo info;
        info.name = field(f, "name").get<std::string>();
        if (f.contains("params"))
            for (const auto& [k, v] : f.at("params").items()) info.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
        g.set_family(std::move(info));
    }
    return g;
}

Json to_json(const Matching& m) { return {{"edges", edge_list(m.edges())}}; }

Matching matching_from_json(const Graph& g, const Json& j) {
    return Matching::from_edges(g, read_edges(j.is_array() ? j : field(j, "edges")));
}

Json to_json(const SwitchStep& s) { return {{"remove", edge_list(s.removed)}, {"add", edge_list(s.added)}}; }

Json to_json(const ReconfigPath& p) {
    Json steps = Json::array();
    for (const SwitchStep& s : p.steps) steps.push_back(to_json(s));
    return {{"k", p.k}, {"start", to_json(p.start)}, {"steps", steps}, {"end", to_json(p.end)}};
}

ReconfigPath path_from_json(const Graph& g, const Json& j) {
    ReconfigPath p;
    p.start = matching_from_json(g, field(j, "start"));
    p.end = matching_from_json(g, field(j, "end"));
    p.k = j.contains("k") ? as_int(j.at("k"), "k") : 4;
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) parse_fail("steps must be an array");
    for (const Json& s : steps) {
        SwitchStep step{read_edges(field(s, "remove")), read_edges(field(s, "add"))};
        for (Edge& e : step.removed) e = make_edge(e.u, e.v);
        for (Edge& e : step.added) e = make_edge(e.u, e.v);
        std::sort(step.removed.begin(), step.removed.end());
        std::sort(step.added.begin(), step.added.end());
        p.steps.push_back(std::move(step));
    }
    return p;
}

Json to_json(const Digraph& d) {
    Json arcs = Json::array();
    for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
    return {{"n", d.order()}, {"arcs", arcs}};
}

Digraph digraph_from_json(const Json& j) {
    const int n = as_int(field(j, "n"), "n");
    std::vector<Arc> arcs;
    for (const Edge& e : read_edges(field(j, "arcs"))) arcs.emplace_back(e.u, e.v);
    return Digraph::from_arcs(n, arcs);
}

Json to_json(const PropertyReport& r) {
    return {{"connected", r.connected},
            {"num_components", r.num_components},
            {"component_sizes", r.component_sizes},
            {"isolated", r.isolated},
            {"frozen_counts", r.frozen_counts},
            {"max_fraction", r.max_fraction},
            {"min_nonfrozen_edges", r.min_nonfrozen_edges}};
}

Json to_json(const ThresholdReport& r) {
    return {{"connect", r.connect}, {"giant", r.giant}, {"noiso", r.noiso},
            {"thaw", r.thaw},       {"cluster", r.cluster}, {"report", to_json(r.report)}};
}

Json to_json(const ChainDiagnostics& d) {
    Json curve = Json::array();
    for (const auto& [t, v] : d.tv_curve) curve.push_back({t, v});
    Json j;
    j["omega"] = d.omega;
    j["symmetric"] = d.symmetric;
    j["rows_stochastic"] = d.rows_stochastic;
    j["min_diagonal"] = d.min_diagonal;
    j["stationary_residual"] = d.stationary_residual;
    j["lambda_star"] = d.lambda_star;
    j["spectral_gap"] = d.spectral_gap;
    j["tau_mix_empirical"] = d.tau_mix_empirical ? Json(*d.tau_mix_empirical) : Json(nullptr);
    j["tv_curve"] = curve;
    return j;
}

Json to_json(const PathCheck& c) {
    return {{"valid", c.valid}, {"violation", std::string(to_string(c.violation))}, {"step", c.step},
            {"message", c.message}};
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, const std::vector<std::string>& witness_files) {
    out << "n,k,gamma,delta,property,witness_found,witness_file\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ScanRow& r = rows[i];
        out << r.n << ',' << r.k << ',' << r.gamma.to_string() << ',' << r.delta << ',' << to_string(r.property) << ','
            << (r.witness_found ? "true" : "false") << ',' << (i < witness_files.size() ? witness_files[i] : "")
            << '\n';
    }
}

void write_trajectory_csv(std::ostream& out, const std::vector<std::pair<std::uint64_t, std::size_t>>& trajectory) {
    out << "step,matching_index\n";
    for (const auto& [t, idx] : trajectory) out << t << ',' << idx << '\n';
}

}  // namespace kswitch
