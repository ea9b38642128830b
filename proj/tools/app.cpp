#include "app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <regex>
#include <set>
#include <sstream>

#include "kswitch/chain.hpp"
#include "kswitch/digraph.hpp"
#include "kswitch/enumerate.hpp"
#include "kswitch/errors.hpp"
#include "kswitch/generators.hpp"
#include "kswitch/instances.hpp"
#include "kswitch/io.hpp"
#include "kswitch/reconfig.hpp"
#include "kswitch/rng.hpp"
#include "kswitch/switch_graph.hpp"
#include "kswitch/thresholds.hpp"

#ifndef KSWITCH_VERSION
#define KSWITCH_VERSION "0.0.0"
#endif

namespace kswitch::cli {

namespace {

struct Settings {
    std::string command;
    std::string config;

    std::string graph;
    std::string graph_file;
    std::string family;
    int family_k = 0;
    int p = 1;
    int n = 0;
    int cycles = 1;
    int delta = 0;
    bool bipartite = false;

    int k = 2;
    std::string gamma = "1";
    std::uint64_t seed = 0;
    std::string output;
    std::string format;
    unsigned threads = 1;
    std::uint64_t cap = kDefaultEnumerationCap;
    bool assert_flag = false;

    int size = -1;
    bool count_only = false;
    bool injection = false;

    double c = 2.0;
    std::string assert_property;
    bool list_components = false;

    int from = -1;
    int to = -1;
    bool all_pairs = false;
    std::string replay;
    int refine = 0;
    int cycle_length = 8;

    std::string chain = "gamma4";
    bool exact = false;
    std::uint64_t steps = 0;
    std::size_t omega_cap = kDefaultOmegaCap;
    std::string trajectory;
    std::string method = "auto";
    int t_max = 10000;
    bool congestion = false;

    int hp = 0;
    std::string digraph_file;
    int isolated = 0;
    int matching_index = 0;

    std::string property = "connect";
    std::string strategy = "exhaustive";
    int trials = 20;
    std::string witness_dir;
};

const char* const kCommands[] = {"enumerate", "switchgraph", "path", "chain", "construct", "bridge", "scan"};

void add_graph_options(CLI::App* sub, Settings& s) {
    auto* g = sub->add_option_group("graph", "Host graph (exactly one of --graph, --graph-file, --family)");
    g->add_option("--graph", s.graph, "Named graph: Kn, Ka,a (complete bipartite) or Cn");
    g->add_option("--graph-file", s.graph_file, "Graph JSON file");
    g->add_option("--family", s.family, "Family: G, Gbip, F, Fbip, cycles, random, isolated");
    g->require_option(0, 1);
    sub->add_option("--family-k", s.family_k, "Family parameter k when it differs from --k");
    sub->add_option("--p", s.p, "Number of X-cycles for the G families");
    sub->add_option("--n", s.n, "Order parameter of the family (side size for bipartite families)");
    sub->add_option("--cycles", s.cycles, "Number of cycles for the cycles family");
    sub->add_option("--delta", s.delta, "Minimum degree for the random family");
    sub->add_flag("--bipartite", s.bipartite, "Bipartite variant (cycles and random families)");
    sub->add_option("--seed", s.seed, "Seed; substreams graph-gen, chain and scan derive from it");
}

void add_common(CLI::App* sub, Settings& s, const std::string& formats) {
    sub->add_option("--config", s.config, "JSON config file; command-line flags win");
    sub->add_option("--output,-o", s.output, "Output file (default stdout)");
    sub->add_option("--format", s.format, "Output format: " + formats);
}

std::unique_ptr<CLI::App> make_app(Settings& s) {
    auto app = std::make_unique<CLI::App>("Reconfiguration workbench for matchings under k-switches", "kswitch");
    app->option_defaults()->always_capture_default();
    app->set_version_flag("--version", KSWITCH_VERSION);
    app->add_option("--config", s.config, "JSON config file holding a \"command\" key");
    app->require_subcommand(0, 1);

    auto* en = app->add_subcommand("enumerate", "List or count the matchings of one size");
    add_common(en, s, "jsonl (default), json");
    add_graph_options(en, s);
    en->add_option("--size", s.size, "Number of edges (default: gamma-matchings)");
    en->add_option("--gamma", s.gamma, "Matching size parameter (default 1)");
    en->add_flag("--count-only", s.count_only, "Print only the count");
    en->add_flag("--injection", s.injection,
                 "Map every near-perfect matching into (pair, perfect matching) and check injectivity");
    en->add_flag("--assert", s.assert_flag, "With --injection: exit 4 unless the map is injective and #near <= n^2 #perfect");
    en->add_option("--cap", s.cap, "Enumeration budget");
    en->add_option("--k", s.k, "Family parameter k");

    auto* sg = app->add_subcommand("switchgraph", "Build H_k(G, gamma) and evaluate threshold properties");
    add_common(sg, s, "json");
    add_graph_options(sg, s);
    sg->add_option("--k", s.k, "Switch size");
    sg->add_option("--gamma", s.gamma, "Matching size parameter");
    sg->add_option("--c", s.c, "Constant of the giant, thaw and cluster properties");
    sg->add_option("--cap", s.cap, "Enumeration budget");
    sg->add_option("--threads", s.threads, "Worker threads for the all-pairs pass");
    sg->add_flag("--components", s.list_components, "List component members and frozen edges");
    sg->add_option("--assert", s.assert_property, "Exit 4 unless this property holds: connect, giant, noiso, thaw, cluster");

    auto* pa = app->add_subcommand("path", "Construct and validate k-switch reconfiguration paths");
    add_common(pa, s, "json");
    add_graph_options(pa, s);
    pa->add_option("--k", s.k, "Switch size bound (2, 3 or 4)");
    pa->add_option("--gamma", s.gamma, "Matching size parameter");
    pa->add_option("--from", s.from, "Index of the start matching in canonical order");
    pa->add_option("--to", s.to, "Index of the target matching in canonical order");
    pa->add_flag("--all-pairs", s.all_pairs, "Every unordered pair of matchings");
    pa->add_option("--replay", s.replay, "Validate a path JSON file instead of constructing one");
    pa->add_option("--refine", s.refine, "Split single-cycle switches on this many random qualifying instances");
    pa->add_option("--cycle-length", s.cycle_length, "Support cycle length for --refine: 8 (4-switch) or 6 (3-switch)");
    pa->add_option("--cap", s.cap, "Enumeration budget");
    pa->add_flag("--assert", s.assert_flag, "Exit 4 if any path or refinement fails or is invalid");

    auto* ch = app->add_subcommand("chain", "Exact diagnostics or simulation of a switch chain");
    add_common(ch, s, "json");
    add_graph_options(ch, s);
    ch->add_option("--k", s.k, "Family parameter k");
    ch->add_option("--chain", s.chain, "gamma4, switch2 or switch3");
    ch->add_flag("--exact", s.exact, "Exact transition matrix diagnostics");
    ch->add_option("--method", s.method, "Exact matrix route: auto, draws or cycles");
    ch->add_option("--t-max", s.t_max, "Horizon of the total variation curve");
    ch->add_flag("--congestion", s.congestion, "Canonical path congestion (gamma4, with --exact)");
    ch->add_option("--steps", s.steps, "Simulation length");
    ch->add_option("--omega-cap", s.omega_cap, "Largest state space handled exactly");
    ch->add_option("--trajectory", s.trajectory, "Write step,matching_index CSV to this file");
    ch->add_flag("--assert", s.assert_flag, "Exit 4 unless the exact matrix is symmetric and stochastic");
    ch->footer("Trajectory CSV columns: step,matching_index");

    auto* co = app->add_subcommand("construct", "Generate a graph and report its degree statistics");
    add_common(co, s, "json");
    add_graph_options(co, s);
    co->add_option("--k", s.k, "Family parameter k");
    co->add_option("--gamma", s.gamma, "Family parameter gamma");

    auto* br = app->add_subcommand("bridge", "Matching and digraph translations, short directed cycles");
    add_common(br, s, "json");
    auto* src = br->add_option_group("source", "Exactly one source");
    src->add_option("--hp", s.hp, "Circulant digraph H_p");
    src->add_option("--digraph-file", s.digraph_file, "Digraph JSON file");
    src->add_option("--isolated", s.isolated, "G_n with an isolated perfect matching");
    src->add_option("--graph", s.graph, "Named graph, paired with --matching-index");
    src->add_option("--graph-file", s.graph_file, "Graph JSON file, paired with --matching-index");
    src->require_option(1);
    br->add_option("--matching-index", s.matching_index, "Perfect matching (canonical order) to translate");
    br->add_option("--k", s.k, "Cycle length bound / switch size");
    br->add_option("--cap", s.cap, "Enumeration budget for the isolation check");
    br->add_flag("--assert", s.assert_flag, "Exit 4 if isolation and the cycle test disagree, or M is not isolated");

    auto* sc = app->add_subcommand("scan", "Search for threshold counterexamples by minimum degree");
    add_common(sc, s, "csv (default), json");
    sc->add_option("--n", s.n, "Vertex count (side size with --bipartite)")->required();
    sc->add_option("--k", s.k, "Switch size");
    sc->add_option("--gamma", s.gamma, "Matching size parameter");
    sc->add_option("--property", s.property, "connect, giant, noiso, thaw or cluster");
    sc->add_option("--c", s.c, "Property constant");
    sc->add_flag("--bipartite", s.bipartite, "Scan balanced bipartite graphs");
    sc->add_option("--strategy", s.strategy, "exhaustive or random");
    sc->add_option("--trials", s.trials, "Random graphs per delta");
    sc->add_option("--seed", s.seed, "Seed of the scan substream");
    sc->add_option("--witness-dir", s.witness_dir, "Directory for witness graph JSON files");
    sc->add_flag("--assert", s.assert_flag, "Exit 4 if any witness is found");
    sc->footer("CSV columns: n,k,gamma,delta,property,witness_found,witness_file");
    return app;
}

CLI::App* chosen(CLI::App& app) {
    for (const char* name : kCommands) {
        CLI::App* sub = app.get_subcommand(name);
        if (sub->parsed()) return sub;
    }
    return nullptr;
}

std::string option_key(const CLI::Option* opt) {
    if (!opt->get_lnames().empty()) return opt->get_lnames().front();
    if (!opt->get_snames().empty()) return opt->get_snames().front();
    return opt->get_name();
}

const CLI::Option* find_option(CLI::App* sub, const std::string& key) {
    for (const CLI::Option* opt : sub->get_options([](const CLI::Option*) { return true; }))
        if (option_key(opt) == key) return opt;
    for (CLI::App* group : sub->get_subcommands([](CLI::App* a) { return a->get_name().empty(); }))
        for (const CLI::Option* opt : group->get_options([](const CLI::Option*) { return true; }))
            if (option_key(opt) == key) return opt;
    return nullptr;
}

std::vector<const CLI::Option*> all_options(CLI::App* sub) {
    std::vector<const CLI::Option*> out;
    for (const CLI::Option* opt : sub->get_options([](const CLI::Option*) { return true; })) out.push_back(opt);
    for (CLI::App* group : sub->get_subcommands([](CLI::App* a) { return a->get_name().empty(); }))
        for (const CLI::Option* opt : group->get_options([](const CLI::Option*) { return true; })) out.push_back(opt);
    return out;
}

bool is_selector(const std::string& key) {
    static const std::set<std::string> keys{"graph", "graph-file", "family", "hp", "digraph-file", "isolated"};
    return keys.count(key) > 0;
}

bool user_selector(CLI::App* sub) {
    for (const CLI::Option* opt : all_options(sub))
        if (is_selector(option_key(opt)) && opt->count() > 0) return true;
    return false;
}

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

/// Turn config entries into flags for the chosen subcommand, skipping keys given on the command line.
std::vector<std::string> config_arguments(const Json& cfg, CLI::App* user_sub, CLI::App* fresh_sub) {
    std::vector<std::string> out;
    for (const auto& [key, value] : cfg.items()) {
        if (key == "command") continue;
        const CLI::Option* opt = find_option(fresh_sub, key);
        if (opt == nullptr || key == "help" || key == "config") config_error("unknown config key '" + key + "'");
        if (user_sub != nullptr) {
            const CLI::Option* given = find_option(user_sub, key);
            if (given != nullptr && given->count() > 0) continue;
            // A selector on the command line replaces the config's selector as a whole.
            if (is_selector(key) && user_selector(user_sub)) continue;
        }
        const std::string flag = "--" + key;
        if (value.is_boolean()) {
            if (opt->get_expected_min() == 0) {
                if (value.get<bool>()) out.push_back(flag);
            } else {
                out.push_back(flag);
                out.push_back(value.get<bool>() ? "true" : "false");
            }
        } else if (value.is_array()) {
            for (const Json& v : value) {
                out.push_back(flag);
                out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
            }
        } else if (value.is_string()) {
            out.push_back(flag);
            out.push_back(value.get<std::string>());
        } else if (value.is_number()) {
            out.push_back(flag);
            out.push_back(value.dump());
        } else {
            config_error("config key '" + key + "' has an unsupported value");
        }
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) config_error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
    }
}

/// Every option of the subcommand with its effective value, in declaration order.
Json resolved_config(const std::string& command, CLI::App* sub) {
    Json j;
    j["command"] = command;
    for (const CLI::Option* opt : all_options(sub)) {
        const std::string key = option_key(opt);
        if (key == "help" || key == "config") continue;
        if (opt->get_expected_min() == 0) {
            j[key] = opt->count() > 0 && opt->as<bool>();
        } else if (opt->count() > 0) {
            j[key] = opt->results().size() == 1 ? Json(opt->results().front()) : Json(opt->results());
        } else {
            j[key] = opt->get_default_str();
        }
    }
    return j;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

struct Context {
    Settings s;
    Json meta;
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;
    std::unique_ptr<std::ofstream> file;
    int status = kOk;

    std::ostream& sink() { return *out; }
    void emit(Json body) {
        Json j;
        j["meta"] = meta;
        for (auto& [key, value] : body.items()) j[key] = std::move(value);
        sink() << j.dump(2) << '\n';
    }
    std::string csv_header() const {
        return "# tool_version=" + meta["tool_version"].get<std::string>() +
               " config_hash=" + meta["config_hash"].get<std::string>() + "\n";
    }
};

Graph named_graph(const std::string& name) {
    std::smatch m;
    if (std::regex_match(name, m, std::regex(R"(K(\d+))"))) return complete_graph(std::stoi(m[1]));
    if (std::regex_match(name, m, std::regex(R"(K(\d+),(\d+))"))) {
        if (m[1] != m[2]) config_error("complete bipartite graphs must be balanced: " + name);
        return complete_bipartite(std::stoi(m[1]));
    }
    if (std::regex_match(name, m, std::regex(R"(C(\d+))"))) return cycle_graph(std::stoi(m[1]));
    config_error("unknown graph name '" + name + "' (expected Kn, Ka,a or Cn)");
}

Graph select_graph(const Settings& s) {
    if (!s.graph.empty()) return named_graph(s.graph);
    if (!s.graph_file.empty()) return graph_from_json(load_json_file(s.graph_file));
    const int fk = s.family_k > 0 ? s.family_k : s.k;
    const Rational gamma = Rational::parse(s.gamma);
    if (s.family == "G") return gen_G_family(fk, s.p, gamma, s.n);
    if (s.family == "Gbip") return gen_G_family_bip(fk, s.p, gamma, s.n);
    if (s.family == "F") return gen_F(fk, s.n);
    if (s.family == "Fbip") return gen_F_bip(fk, s.n);
    if (s.family == "cycles") return gen_cycle_union(fk, s.cycles, s.bipartite);
    if (s.family == "random") return gen_random_min_degree(s.n, s.delta, s.bipartite, s.seed);
    if (s.family == "isolated") return gen_isolated_general(s.n).graph;
    if (s.family.empty()) config_error("one of --graph, --graph-file or --family is required");
    config_error("unknown family '" + s.family + "'");
}

Json graph_summary(const Graph& g) {
    const DegreeReport r = degree_report(g);
    Json j;
    j["n"] = g.order();
    j["edges"] = g.size();
    j["bipartite"] = g.is_bipartite();
    if (g.family()) j["family"] = to_json(g)["family"];
    j["min_degree"] = r.min_degree;
    j["ore_general"] = r.ore_general == kInfiniteDegreeSum ? Json("inf") : Json(r.ore_general);
    if (r.ore_bip) j["ore_bip"] = *r.ore_bip == kInfiniteDegreeSum ? Json("inf") : Json(*r.ore_bip);
    return j;
}

void require_format(const Settings& s, std::initializer_list<const char*> allowed) {
    if (s.format.empty()) return;
    for (const char* f : allowed)
        if (s.format == f) return;
    config_error("format '" + s.format + "' is not available for " + s.command);
}

// ---------------------------------------------------------------------------

void cmd_enumerate(Context& ctx) {
    const Settings& s = ctx.s;
    require_format(s, {"jsonl", "json"});
    const Graph g = select_graph(s);
    const int size = s.size >= 0 ? s.size : matching_size_for(g, Rational::parse(s.gamma));
    if (size < 0 || 2 * size > g.order()) config_error("matching size out of range");
    if (s.injection) {
        if (g.order() % 2 != 0) config_error("--injection needs an even vertex count");
        const std::uint64_t perfect = count_perfect(g);
        std::set<InjectionImage> images;
        std::uint64_t near = 0;
        bool injective = true;
        for (const Matching& m : enumerate_matchings(g, g.order() / 2 - 1, s.cap)) {
            ++near;
            injective = images.insert(near_perfect_injection(g, m)).second && injective;
        }
        const std::uint64_t n = static_cast<std::uint64_t>(g.order());
        const bool within = near <= n * n * perfect;
        ctx.emit({{"graph", graph_summary(g)},
                  {"perfect", perfect},
                  {"near_perfect", near},
                  {"bound", n * n * perfect},
                  {"within_bound", within},
                  {"injective", injective}});
        if (s.assert_flag && !(within && injective)) ctx.status = kPropertyViolated;
        return;
    }
    if (s.count_only) {
        ctx.emit({{"size", size}, {"count", count_matchings(g, size)}});
        return;
    }
    const std::vector<Matching> ms = enumerate_matchings(g, size, s.cap);
    if (s.format == "json") {
        Json list = Json::array();
        for (const Matching& m : ms) list.push_back(to_json(m));
        ctx.emit({{"size", size}, {"count", ms.size()}, {"matchings", list}});
        return;
    }
    ctx.sink() << Json{{"meta", ctx.meta}, {"size", size}, {"count", ms.size()}}.dump() << '\n';
    for (const Matching& m : ms) ctx.sink() << to_json(m).dump() << '\n';
}

void cmd_switchgraph(Context& ctx) {
    const Settings& s = ctx.s;
    require_format(s, {"json"});
    const Graph g = select_graph(s);
    const Rational gamma = Rational::parse(s.gamma);
    const int size = matching_size_for(g, gamma);
    SwitchGraph::Options opts;
    opts.cap = s.cap;
    opts.threads = std::max(1U, s.threads);
    const SwitchGraph h = SwitchGraph::build(g, size, s.k, opts);
    const ThresholdReport t = evaluate_thresholds(h, g, s.c);
    Json body;
    body["graph"] = graph_summary(g);
    body["k"] = s.k;
    body["gamma"] = gamma.to_string();
    body["matching_size"] = size;
    body["matchings"] = h.order();
    body["report"] = to_json(t.report);
    body["properties"] = {{"connect", t.connect}, {"giant", t.giant}, {"noiso", t.noiso},
                          {"thaw", t.thaw},       {"cluster", t.cluster}, {"c", s.c}};
    if (s.list_components) {
        Json comps = Json::array();
        for (int c = 0; c < h.num_components(); ++c) {
            Json members = Json::array();
            for (std::size_t i : h.components()[c]) members.push_back(i);
            Json frozen = Json::array();
            for (const Edge& e : h.frozen_edges(c)) frozen.push_back({e.u, e.v});
            comps.push_back({{"members", members}, {"frozen", frozen}});
        }
        body["components"] = comps;
    }
    ctx.emit(body);
    if (!s.assert_property.empty() && !t.holds(parse_property(s.assert_property))) {
        *ctx.err << "kswitch: property " << s.assert_property << " violated\n";
        ctx.status = kPropertyViolated;
    }
}

/// Random instances from gen_refine_instance, alternating chordless and chorded supports.
void cmd_refine(Context& ctx) {
    const Settings& s = ctx.s;
    if (s.cycle_length != 6 && s.cycle_length != 8) config_error("--cycle-length must be 6 or 8");
    const bool eight = s.cycle_length == 8;
    const std::size_t max_steps = eight ? 3 : 4;
    const int max_size = eight ? 3 : 2;
    const Rng base = Rng(s.seed).substream("graph-gen").substream(static_cast<std::uint64_t>(s.cycle_length));
    std::size_t passed = 0;
    std::size_t chordless = 0;
    std::vector<std::size_t> by_steps(max_steps + 2, 0);
    Json failures = Json::array();
    for (int t = 0; t < s.refine; ++t) {
        RefineInstanceOptions opts;
        opts.cycle_length = s.cycle_length;
        opts.bipartite = s.bipartite;
        opts.chordless = t % 2 == 0;
        if (eight) opts.n = s.bipartite ? 5 + t % 3 / 2 : 10 + 2 * (t % 3 / 2);
        else opts.n = s.bipartite ? 4 + t % 3 / 2 : 8 + 2 * (t % 3 / 2);
        opts.deletions = 4 + t % 20;
        const std::uint64_t seed = base.substream(static_cast<std::uint64_t>(t)).seed();
        std::string problem;
        try {
            const RefineInstance inst = gen_refine_instance(opts, seed);
            const auto steps = eight ? refine_4_to_3(inst.graph, inst.matching, inst.step)
                                     : refine_3_to_2(inst.graph, inst.matching, inst.step);
            Matching cur = inst.matching;
            for (const SwitchStep& st : steps) {
                if (st.size_class() > max_size) problem = "step of size " + std::to_string(st.size_class());
                cur = apply_step(inst.graph, cur, st);
            }
            if (steps.size() > max_steps) problem = std::to_string(steps.size()) + " steps";
            if (cur != apply_step(inst.graph, inst.matching, inst.step)) problem = "replay mismatch";
            if (inst.chordless) {
                ++chordless;
                if (steps.size() != max_steps) problem = "chordless support split in fewer steps";
            }
            ++by_steps[std::min(steps.size(), max_steps + 1)];
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PatternNotFound && e.code() != ErrorCode::InvalidStep &&
                e.code() != ErrorCode::InfeasibleDegree)
                throw;
            problem = e.what();
        }
        if (problem.empty()) ++passed;
        else failures.push_back({{"instance", t}, {"seed", seed}, {"problem", problem}});
    }
    ctx.emit({{"cycle_length", s.cycle_length},
              {"bipartite", s.bipartite},
              {"instances", s.refine},
              {"passed", passed},
              {"chordless", chordless},
              {"step_counts", by_steps},
              {"failures", failures}});
    if (s.assert_flag && passed != static_cast<std::size_t>(s.refine)) ctx.status = kPropertyViolated;
}

void cmd_path(Context& ctx) {
    const Settings& s = ctx.s;
    require_format(s, {"json"});
    if (s.refine > 0) {
        cmd_refine(ctx);
        return;
    }
    const Graph g = select_graph(s);
    if (!s.replay.empty()) {
        const ReconfigPath path = path_from_json(g, load_json_file(s.replay));
        const PathCheck pc = validate_path(g, path);
        ctx.emit({{"replay", s.replay}, {"check", to_json(pc)}});
        if (s.assert_flag && !pc.valid) ctx.status = kPropertyViolated;
        return;
    }
    if (s.k < 2 || s.k > 4) config_error("path needs k in 2..4");
    const int size = matching_size_for(g, Rational::parse(s.gamma));
    const std::vector<Matching> ms = enumerate_matchings(g, size, s.cap);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (s.all_pairs) {
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = i + 1; j < ms.size(); ++j) pairs.emplace_back(i, j);
    } else {
        if (s.from < 0 || s.to < 0) config_error("path needs --from and --to, or --all-pairs");
        if (static_cast<std::size_t>(std::max(s.from, s.to)) >= ms.size())
            config_error("matching index out of range (" + std::to_string(ms.size()) + " matchings)");
        pairs.emplace_back(s.from, s.to);
    }
    Json list = Json::array();
    std::size_t valid = 0;
    for (const auto& [i, j] : pairs) {
        Json entry{{"from", i}, {"to", j}};
        try {
            const ReconfigPath path = k_switch_path(g, ms[i], ms[j], s.k);
            const PathCheck pc = validate_path(g, path);
            valid += pc.valid ? 1 : 0;
            entry["path"] = to_json(path);
            entry["check"] = to_json(pc);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoMoveFound && e.code() != ErrorCode::PatternNotFound) throw;
            entry["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
        }
        list.push_back(std::move(entry));
    }
    ctx.emit({{"graph", graph_summary(g)}, {"k", s.k}, {"pairs", pairs.size()}, {"valid", valid}, {"paths", list}});
    if (s.assert_flag && valid != pairs.size()) ctx.status = kPropertyViolated;
}

void cmd_chain(Context& ctx) {
    const Settings& s = ctx.s;
    require_format(s, {"json"});
    const Graph g = select_graph(s);
    const ChainKind kind = parse_chain(s.chain);
    Json body;
    body["graph"] = graph_summary(g);
    body["chain"] = std::string(to_string(kind));
    if (s.exact) {
        MatrixMethod method = MatrixMethod::Auto;
        if (s.method == "draws") method = MatrixMethod::Draws;
        else if (s.method == "cycles") method = MatrixMethod::Cycles;
        else if (s.method != "auto") config_error("unknown method '" + s.method + "'");
        const TransitionMatrix p = exact_transition_matrix(g, kind, s.omega_cap, method);
        DiagnosticsOptions opts;
        opts.omega_cap = s.omega_cap;
        opts.t_max = s.t_max;
        const ChainDiagnostics d = diagnostics_from_matrix(p, opts);
        body["diagnostics"] = to_json(d);
        if (s.congestion) {
            if (kind != ChainKind::Gamma4) config_error("congestion is defined for the gamma4 chain");
            const CongestionReport r = canonical_path_congestion(g, p);
            body["congestion"] = {{"rho", r.rho},          {"bound", r.bound},           {"paths", r.paths},
                                  {"max_length", r.max_length}, {"all_moves_legal", r.all_moves_legal}};
        }
        if (s.assert_flag && !(d.symmetric && d.rows_stochastic)) ctx.status = kPropertyViolated;
    }
    if (s.steps > 0 || !s.exact) {
        SimulationOptions opts;
        opts.steps = s.steps;
        opts.seed = s.seed;
        opts.omega_cap = s.omega_cap;
        opts.record_trajectory = !s.trajectory.empty();
        const SimulationSummary sim = simulate(g, kind, opts);
        Json hist = Json::array();
        for (std::uint64_t c : sim.histogram) hist.push_back(c);
        body["simulation"] = {{"steps", s.steps},
                              {"seed", s.seed},
                              {"accepted_moves", sim.accepted_moves},
                              {"final", to_json(sim.final_matching)},
                              {"omega", sim.states.size()},
                              {"histogram", hist},
                              {"chi_square", sim.chi_square}};
        if (!s.trajectory.empty()) {
            std::ofstream tf(s.trajectory);
            if (!tf) config_error("cannot write '" + s.trajectory + "'");
            tf << ctx.csv_header();
            write_trajectory_csv(tf, sim.trajectory);
        }
    }
    ctx.emit(body);
}

void cmd_construct(Context& ctx) {
    require_format(ctx.s, {"json"});
    const Graph g = select_graph(ctx.s);
    ctx.emit({{"summary", graph_summary(g)}, {"graph", to_json(g)}});
}

bool isolated_in(const Graph& g, const Matching& m, int k, std::uint64_t cap) {
    for (const Matching& other : enumerate_perfect_matchings(g, cap)) {
        const int d = hamming(m, other);
        if (d > 0 && d <= 2 * k) return false;
    }
    return true;
}

void cmd_bridge(Context& ctx) {
    const Settings& s = ctx.s;
    require_format(s, {"json"});
    Json body;
    body["k"] = s.k;
    body["reference_isolation_constant"] = kIsolationDegreeConstant;
    Graph g;
    Matching m;
    Digraph d;
    if (s.hp > 0 || !s.digraph_file.empty()) {
        d = s.hp > 0 ? gen_Hp(s.hp) : digraph_from_json(load_json_file(s.digraph_file));
        std::tie(g, m) = digraph_to_bip(d);
        body["source"] = s.hp > 0 ? "H_" + std::to_string(s.hp) : s.digraph_file;
    } else if (s.isolated > 0) {
        const IsolatedInstance inst = gen_isolated_general(s.isolated);
        g = inst.graph;
        m = inst.matching;
        d = matching_to_digraph(g, m);
        body["source"] = "G_" + std::to_string(s.isolated);
        body["predicted_min_degree"] = inst.predicted_min_degree;
    } else {
        g = select_graph(s);
        const std::vector<Matching> pms = enumerate_perfect_matchings(g, s.cap);
        if (s.matching_index < 0 || static_cast<std::size_t>(s.matching_index) >= pms.size())
            config_error("matching index out of range (" + std::to_string(pms.size()) + " perfect matchings)");
        m = pms[s.matching_index];
        d = g.is_bipartite() ? bip_to_digraph(g, m) : matching_to_digraph(g, m);
        body["source"] = s.graph.empty() ? s.graph_file : s.graph;
    }
    const auto cycle = find_directed_cycle_at_most(d, s.k);
    const bool isolated = isolated_in(g, m, s.k, s.cap);
    body["graph"] = graph_summary(g);
    body["matching"] = to_json(m);
    body["digraph"] = to_json(d);
    body["oriented"] = d.oriented();
    body["min_out_degree"] = d.min_out_degree();
    body["min_semidegree"] = d.min_semidegree();
    body["short_cycle"] = cycle ? Json(*cycle) : Json(nullptr);
    body["isolated"] = isolated;
    std::size_t in_two_switch = 0;
    for (const Edge& e : m.edges()) in_two_switch += edge_in_two_switch(g, m, e) ? 1 : 0;
    body["edges_in_two_switch"] = in_two_switch;
    // For a translation that is exact (bipartite images), isolation holds iff no short cycle exists.
    const bool exact = g.is_bipartite();
    body["equivalence_holds"] = exact ? Json(isolated == !cycle.has_value()) : Json(nullptr);
    ctx.emit(body);
    if (s.assert_flag && (!isolated || (exact && isolated == cycle.has_value()))) ctx.status = kPropertyViolated;
}

void cmd_scan(Context& ctx) {
    const Settings& s = ctx.s;
    require_format(s, {"csv", "json"});
    ScanStrategy strategy;
    if (s.strategy == "random") {
        strategy.kind = ScanStrategy::Kind::Random;
        strategy.pool = family_pool(s.n, s.k, s.bipartite);
    } else if (s.strategy != "exhaustive") {
        config_error("unknown strategy '" + s.strategy + "'");
    }
    strategy.seed = s.seed;
    strategy.trials = s.trials;
    const std::vector<ScanRow> rows =
        scan_threshold(s.n, s.k, Rational::parse(s.gamma), parse_property(s.property), s.c, s.bipartite, strategy);
    std::vector<std::string> files(rows.size());
    if (!s.witness_dir.empty()) std::filesystem::create_directories(s.witness_dir);
    bool any = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        any = any || rows[i].witness_found;
        if (!rows[i].witness || s.witness_dir.empty()) continue;
        files[i] = "witness_n" + std::to_string(s.n) + "_k" + std::to_string(s.k) + "_" + s.property + "_d" +
                   std::to_string(rows[i].delta) + ".json";
        std::ofstream wf(std::filesystem::path(s.witness_dir) / files[i]);
        Json w;
        w["meta"] = ctx.meta;
        w["graph"] = to_json(*rows[i].witness);
        wf << w.dump(2) << '\n';
    }
    if (s.format == "json") {
        Json list = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const ScanRow& r = rows[i];
            list.push_back({{"delta", r.delta},
                            {"witness_found", r.witness_found},
                            {"witness_file", files[i]},
                            {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}});
        }
        ctx.emit({{"n", s.n}, {"k", s.k}, {"property", s.property}, {"rows", list}});
    } else {
        ctx.sink() << ctx.csv_header();
        write_scan_csv(ctx.sink(), rows, files);
    }
    if (s.assert_flag && any) ctx.status = kPropertyViolated;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::EnumerationBudgetExceeded:
        case ErrorCode::OmegaTooLarge:
            return kBudgetExceeded;
        case ErrorCode::NoMoveFound:
        case ErrorCode::PatternNotFound:
        case ErrorCode::CaseLadderStuck:
        case ErrorCode::NoAugmentingEdge:
        case ErrorCode::InvalidStep:
            return kRuntimeFailure;
        default:
            return kConfigError;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());

    Settings first;
    auto probe = make_app(first);
    try {
        probe->parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = probe->exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        CLI::App* user_sub = chosen(*probe);
        std::string command = user_sub ? user_sub->get_name() : "";
        std::vector<std::string> final_args;
        Json cfg = Json::object();
        if (!first.config.empty()) {
            cfg = load_json_file(first.config);
            if (!cfg.is_object()) config_error("config must be a JSON object");
            if (cfg.contains("command")) {
                const std::string c = cfg["command"].get<std::string>();
                if (!command.empty() && c != command)
                    config_error("config is for '" + c + "' but the command line runs '" + command + "'");
                command = c;
            }
        }
        if (command.empty()) {
            err << probe->help();
            return kConfigError;
        }
        Settings scratch;
        auto fresh = make_app(scratch);
        CLI::App* fresh_sub = fresh->get_subcommand(command);
        final_args.push_back(command);
        for (const std::string& a : config_arguments(cfg, user_sub, fresh_sub)) final_args.push_back(a);
        // Command-line arguments after the subcommand name come last so they win.
        if (user_sub != nullptr) {
            auto pos = std::find(args.begin() + 1, args.end(), command);
            for (auto it = pos == args.end() ? pos : pos + 1; it != args.end(); ++it) final_args.push_back(*it);
        }

        Context ctx;
        auto app = make_app(ctx.s);
        std::reverse(final_args.begin(), final_args.end());
        try {
            app->parse(final_args);
        } catch (const CLI::ParseError& e) {
            const int code = app->exit(e, out, err);
            return code == 0 ? kOk : kConfigError;
        }
        ctx.s.command = command;
        const Json resolved = resolved_config(command, app->get_subcommand(command));
        const std::string canonical = resolved.dump();
        ctx.meta = {{"tool", "kswitch"}, {"tool_version", KSWITCH_VERSION}, {"config_hash", hex64(hash_name(canonical))}};
        err << "kswitch: resolved config " << canonical << '\n';

        ctx.out = &out;
        ctx.err = &err;
        if (!ctx.s.output.empty()) {
            ctx.file = std::make_unique<std::ofstream>(ctx.s.output);
            if (!*ctx.file) config_error("cannot write '" + ctx.s.output + "'");
            ctx.out = ctx.file.get();
        }
        if (command == "enumerate") cmd_enumerate(ctx);
        else if (command == "switchgraph") cmd_switchgraph(ctx);
        else if (command == "path") cmd_path(ctx);
        else if (command == "chain") cmd_chain(ctx);
        else if (command == "construct") cmd_construct(ctx);
        else if (command == "bridge") cmd_bridge(ctx);
        else if (command == "scan") cmd_scan(ctx);
        return ctx.status;
    } catch (const Error& e) {
        err << "kswitch: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "kswitch: " << e.what() << '\n';
        return kRuntimeFailure;
    }
}

}  // namespace kswitch::cli
