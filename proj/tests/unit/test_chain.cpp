#include <doctest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "kswitch/chain.hpp"
#include "kswitch/enumerate.hpp"
#include "kswitch/generators.hpp"
#include "kswitch/switch_graph.hpp"

using namespace kswitch;
using testing::error_of;

namespace {

Matching M(const Graph& g, std::vector<Edge> edges) { return Matching::from_edges(g, std::move(edges)); }

// Transition counts recomputed from scratch: walk u1 v1 u2 v2 ..., stop at the first
// later draw equal to u1, keep simple cycles through graph edges, halve for laziness.
std::vector<std::uint64_t> oracle_counts(const Graph& g, const std::vector<Matching>& states, int j) {
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!g.is_bipartite() || g.side(v) == 0) pool.push_back(v);
    const std::size_t omega = states.size();
    std::vector<std::uint64_t> counts(omega * omega, 0);
    std::size_t seqs = 1;
    for (int i = 0; i < j; ++i) seqs *= pool.size();
    for (std::size_t a = 0; a < omega; ++a) {
        const auto mate = states[a].mates(g.order());
        for (std::size_t code = 0; code < seqs; ++code) {
            std::vector<Vertex> u(j);
            std::size_t c = code;
            for (int i = 0; i < j; ++i) {
                u[i] = pool[c % pool.size()];
                c /= pool.size();
            }
            int l = j + 1;
            for (int i = 1; i < j; ++i)
                if (u[i] == u[0]) {
                    l = i + 1;
                    break;
                }
            const int len = l - 1;
            std::vector<Vertex> cyc;
            for (int i = 0; i < len; ++i) {
                cyc.push_back(u[i]);
                cyc.push_back(mate[u[i]]);
            }
            bool ok = len >= 2 && std::set<Vertex>(cyc.begin(), cyc.end()).size() == cyc.size();
            for (std::size_t i = 1; ok && i < cyc.size(); i += 2)
                ok = g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]);
            std::size_t b = a;
            if (ok) {
                std::vector<Edge> edges;
                for (std::size_t i = 1; i < cyc.size(); i += 2) edges.push_back(make_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
                for (const Edge& e : states[a].edges())
                    if (std::find(cyc.begin(), cyc.end(), e.u) == cyc.end()) edges.push_back(e);
                const Matching next = Matching::from_edges(edges);
                b = static_cast<std::size_t>(std::lower_bound(states.begin(), states.end(), next) - states.begin());
                REQUIRE(states[b] == next);
                counts[a * omega + b] += 1;
                counts[a * omega + a] += 1;
            } else {
                counts[a * omega + a] += 2;
            }
        }
    }
    return counts;
}

std::uint64_t oracle_denominator(const Graph& g, int j) {
    const std::uint64_t n = g.is_bipartite() ? g.half_order() : g.order();
    std::uint64_t d = 2;
    for (int i = 0; i < j; ++i) d *= n;
    return d;
}

}  // namespace

TEST_CASE("chain names") {
    for (ChainKind k : {ChainKind::Gamma4, ChainKind::Switch2, ChainKind::Switch3}) CHECK(parse_chain(to_string(k)) == k);
    CHECK(draws_per_step(ChainKind::Gamma4) == 4);
    CHECK(draws_per_step(ChainKind::Switch2) == 2);
    CHECK(draws_per_step(ChainKind::Switch3) == 3);
    CHECK(error_of([] { parse_chain("switch5"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("scripted proposals") {
    const Graph k4 = complete_graph(4);
    auto mate = M(k4, {{0, 1}, {2, 3}}).mates(4);
    const std::vector<Vertex> draws{0, 2, 0, 3};
    const auto cyc = propose_cycle(k4, mate, draws);
    REQUIRE(cyc.has_value());
    CHECK(*cyc == std::vector<Vertex>{0, 1, 2, 3});
    switch_cycle(mate, *cyc);
    CHECK(matching_from_mates(mate) == M(k4, {{0, 3}, {1, 2}}));

    const std::vector<Vertex> repeat{1, 1, 2, 3};
    CHECK_FALSE(propose_cycle(k4, M(k4, {{0, 1}, {2, 3}}).mates(4), repeat).has_value());

    const Graph c6 = cycle_graph(6);
    const auto m6 = M(c6, {{0, 1}, {2, 3}, {4, 5}}).mates(6);
    const std::vector<Vertex> around{0, 2, 4, 0};
    const auto full = propose_cycle(c6, m6, around);
    REQUIRE(full.has_value());
    CHECK(full->size() == 6);
    const std::vector<Vertex> backwards{0, 4, 2, 0};
    CHECK_FALSE(propose_cycle(c6, m6, backwards).has_value());

    // a repeat of u2 other than u1 is rejected rather than collapsed
    const Graph k8 = complete_graph(8);
    const auto m8 = M(k8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}).mates(8);
    const std::vector<Vertex> inner{0, 2, 2, 4};
    CHECK_FALSE(propose_cycle(k8, m8, inner).has_value());
}

TEST_CASE("sampling pool") {
    CHECK(sampling_pool(complete_graph(4)).size() == 4);
    const auto left = sampling_pool(complete_bipartite(3));
    CHECK(left == complete_bipartite(3).bipartition().left);
}

TEST_CASE("exact matrices agree with an independent tally") {
    const std::vector<Graph> graphs{complete_graph(4), complete_graph(6), complete_bipartite(3), cycle_graph(6),
                                    gen_cycle_union(2, 2), gen_random_min_degree(6, 3, false, 4)};
    for (const Graph& g : graphs)
        for (ChainKind kind : {ChainKind::Gamma4, ChainKind::Switch2, ChainKind::Switch3}) {
            const TransitionMatrix draws = exact_transition_matrix(g, kind, kDefaultOmegaCap, MatrixMethod::Draws);
            const TransitionMatrix cycles = exact_transition_matrix(g, kind, kDefaultOmegaCap, MatrixMethod::Cycles);
            CHECK(draws.states == cycles.states);
            CHECK(draws.denominator == cycles.denominator);
            CHECK(draws.counts == cycles.counts);
            CHECK(draws.denominator == oracle_denominator(g, draws_per_step(kind)));
            CHECK(draws.counts == oracle_counts(g, draws.states, draws_per_step(kind)));
        }
}

TEST_CASE("exact matrices are symmetric, stochastic and lazy") {
    for (const Graph& g : {complete_graph(4), complete_graph(6), complete_bipartite(3), complete_bipartite(4)})
        for (ChainKind kind : {ChainKind::Gamma4, ChainKind::Switch2, ChainKind::Switch3}) {
            const TransitionMatrix p = exact_transition_matrix(g, kind);
            const std::size_t n = p.omega();
            for (std::size_t a = 0; a < n; ++a) {
                std::uint64_t row = 0;
                for (std::size_t b = 0; b < n; ++b) {
                    CHECK(p.count(a, b) == p.count(b, a));
                    row += p.count(a, b);
                }
                CHECK(row == p.denominator);
                CHECK(2 * p.count(a, a) >= p.denominator);
            }
            const ChainDiagnostics d = diagnostics_from_matrix(p);
            CHECK(d.symmetric);
            CHECK(d.rows_stochastic);
            CHECK(d.spectral_gap >= 0.0);
            CHECK(d.spectral_gap <= 2.0);
            for (double x : d.stationary) CHECK(x == doctest::Approx(1.0 / static_cast<double>(n)).epsilon(1e-12));
            for (std::size_t t = 1; t < d.tv_curve.size(); ++t) CHECK(d.tv_curve[t].second <= d.tv_curve[t - 1].second + 1e-15);
        }
}

TEST_CASE("two-switch chain on K4 moves at equal rates") {
    const TransitionMatrix p = exact_transition_matrix(complete_graph(4), ChainKind::Switch2);
    REQUIRE(p.omega() == 3);
    const std::uint64_t off = p.count(0, 1);
    CHECK(off > 0);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            if (a != b) CHECK(p.count(a, b) == off);
}

TEST_CASE("spectral gaps") {
    const ChainDiagnostics k4 = exact_diagnostics(complete_graph(4), ChainKind::Gamma4);
    CHECK(k4.omega == 3);
    CHECK(k4.spectral_gap > 0.0);
    CHECK(k4.tau_mix_empirical.has_value());
    CHECK(exact_diagnostics(complete_bipartite(3), ChainKind::Gamma4).spectral_gap > 0.0);
    CHECK(exact_diagnostics(complete_graph(6), ChainKind::Switch3).spectral_gap > 0.0);

    const ChainDiagnostics cc = exact_diagnostics(gen_cycle_union(2, 2), ChainKind::Switch2);
    CHECK(cc.omega == 4);
    CHECK(cc.spectral_gap == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(cc.tau_mix_empirical.has_value());

    CHECK(error_of([] { exact_transition_matrix(complete_graph(10), ChainKind::Gamma4, 100); }) ==
          ErrorCode::OmegaTooLarge);
}

TEST_CASE("probability of one fixed four-cycle switch on K_n") {
    // For the two-switch chain the only proposing draws are the 4 ordered pairs on the
    // cycle, so P = 4 / (2 n^2). For Gamma the third draw must return to u1, giving 2/n^3.
    std::vector<double> two;
    std::vector<double> gamma;
    for (int n : {4, 6, 8}) {
        const Graph g = complete_graph(n);
        std::vector<Edge> a_edges;
        std::vector<Edge> b_edges{{0, 2}, {1, 3}};
        for (Vertex v = 0; v < n; v += 2) a_edges.push_back({v, v + 1});
        for (Vertex v = 4; v < n; v += 2) b_edges.push_back({v, v + 1});
        const Matching a = M(g, a_edges);
        const Matching b = M(g, b_edges);
        for (ChainKind kind : {ChainKind::Switch2, ChainKind::Gamma4}) {
            const TransitionMatrix p = exact_transition_matrix(g, kind);
            const auto ia = std::lower_bound(p.states.begin(), p.states.end(), a) - p.states.begin();
            const auto ib = std::lower_bound(p.states.begin(), p.states.end(), b) - p.states.begin();
            const double prob = p.at(ia, ib);
            if (kind == ChainKind::Switch2) {
                CHECK(prob == doctest::Approx(2.0 / (n * n)));
                two.push_back(prob * n * n);
            } else {
                CHECK(prob == doctest::Approx(2.0 / (n * n * n)));
                gamma.push_back(prob * n * n * n);
            }
        }
    }
    for (double r : two) CHECK(std::abs(r / two[0] - 1.0) <= 0.25);
    for (double r : gamma) CHECK(std::abs(r / gamma[0] - 1.0) <= 0.25);
}

TEST_CASE("one-step frequencies of gamma_step match the exact row") {
    const Graph k4 = complete_graph(4);
    const TransitionMatrix p = exact_transition_matrix(k4, ChainKind::Gamma4);
    const Matching start = p.states[0];
    Rng rng(17);
    const int trials = 200000;
    std::vector<int> hits(p.omega(), 0);
    for (int t = 0; t < trials; ++t) {
        const Matching next = gamma_step(k4, start, rng);
        ++hits[std::lower_bound(p.states.begin(), p.states.end(), next) - p.states.begin()];
    }
    for (std::size_t b = 0; b < p.omega(); ++b) {
        const double q = p.at(0, b);
        const double sigma = std::sqrt(q * (1 - q) / trials);
        CHECK(std::abs(hits[b] / double(trials) - q) <= 4 * sigma);
    }

    std::vector<int> two(p.omega(), 0);
    const TransitionMatrix p2 = exact_transition_matrix(k4, ChainKind::Switch2);
    for (int t = 0; t < trials; ++t)
        ++two[std::lower_bound(p.states.begin(), p.states.end(), uniform_switch_step(k4, start, 2, rng)) -
              p.states.begin()];
    for (std::size_t b = 0; b < p.omega(); ++b) {
        const double q = p2.at(0, b);
        const double sigma = std::sqrt(q * (1 - q) / trials);
        CHECK(std::abs(two[b] / double(trials) - q) <= 4 * sigma);
    }
}

TEST_CASE("K4 simulation is close to uniform") {
    const Graph k4 = complete_graph(4);
    const ChainDiagnostics d = exact_diagnostics(k4, ChainKind::Gamma4);
    SimulationOptions opts;
    opts.steps = 100000;
    opts.seed = 1;
    const SimulationSummary s = simulate(k4, ChainKind::Gamma4, opts);
    REQUIRE(s.histogram.size() == 3);
    const double total = static_cast<double>(opts.steps + 1);
    // variance of a time average inflated by the autocorrelation factor (1+l)/(1-l)
    const double inflate = (1 + d.lambda_star) / (1 - d.lambda_star);
    const double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / total * inflate);
    double chi = 0;
    for (std::uint64_t c : s.histogram) {
        CHECK(std::abs(c / total - 1.0 / 3) <= 3 * sigma);
        chi += (c - total / 3) * (c - total / 3) / (total / 3);
    }
    CHECK(s.chi_square == doctest::Approx(chi));
}

TEST_CASE("simulation bookkeeping") {
    const Graph k6 = complete_graph(6);
    SimulationOptions zero;
    const SimulationSummary s0 = simulate(k6, ChainKind::Gamma4, zero);
    std::uint64_t total = 0;
    for (std::uint64_t c : s0.histogram) total += c;
    CHECK(total == 1);
    CHECK(s0.histogram[0] == 1);
    CHECK(s0.final_matching == s0.states[0]);

    SimulationOptions opts;
    opts.steps = 2000;
    opts.seed = 99;
    opts.record_trajectory = true;
    const SimulationSummary a = simulate(k6, ChainKind::Switch3, opts);
    const SimulationSummary b = simulate(k6, ChainKind::Switch3, opts);
    CHECK(a.final_matching == b.final_matching);
    CHECK(a.histogram == b.histogram);
    CHECK(a.trajectory == b.trajectory);
    CHECK(a.trajectory.size() == opts.steps + 1);
    CHECK(a.states[a.trajectory.back().second] == a.final_matching);

    const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    CHECK(error_of([&] { simulate(Graph::build(4, star), ChainKind::Gamma4, zero); }) ==
          ErrorCode::NoPerfectMatching);
}

TEST_CASE("two-switch walks on F stay in the start component") {
    const Graph f = gen_F(2, 12);
    const SwitchGraph h = SwitchGraph::build(f, 6, 2);
    SimulationOptions opts;
    opts.steps = 100000;
    opts.seed = 5;
    opts.start = h.matching(h.components()[1].front());
    const SimulationSummary s = simulate(f, ChainKind::Switch2, opts);
    REQUIRE(s.states.size() == h.order());
    const int label = h.component_labels()[h.components()[1].front()];
    std::size_t visited = 0;
    for (std::size_t i = 0; i < s.histogram.size(); ++i)
        if (s.histogram[i] > 0) {
            CHECK(h.component_labels()[i] == label);
            ++visited;
        }
    CHECK(visited > 1);
}

TEST_CASE("canonical paths") {
    const std::set<std::string> known{"1", "2", "3", "4a", "4b", "5a", "5b", "6a", "6b"};
    for (const Graph& g : {complete_graph(6), complete_bipartite(4)}) {
        const auto ms = enumerate_perfect_matchings(g);
        for (std::size_t i = 0; i < ms.size(); i += 2)
            for (std::size_t j = 0; j < ms.size(); j += 3) {
                const CanonicalPath cp = canonical_path(g, ms[i], ms[j]);
                CHECK(validate_path(g, cp.path).valid);
                CHECK(static_cast<int>(cp.path.steps.size()) <= g.order());
                CHECK(cp.cases.size() == cp.path.steps.size());
                Matching cur = ms[i];
                for (std::size_t s = 0; s < cp.path.steps.size(); ++s) {
                    CHECK(known.count(cp.cases[s]) == 1);
                    const Matching next = apply_step(g, cur, cp.path.steps[s]);
                    const SymDiffDecomposition d = symdiff_decompose(g.order(), cur, next);
                    CHECK(d.cycles.size() == 1);
                    CHECK(d.paths.empty());
                    CHECK(d.hamming <= 8);
                    cur = next;
                }
                if (i == j) CHECK(cp.path.steps.empty());
            }
    }
}

TEST_CASE("canonical path congestion on K4") {
    const Graph k4 = complete_graph(4);
    const TransitionMatrix p = exact_transition_matrix(k4, ChainKind::Gamma4);
    const CongestionReport r = canonical_path_congestion(k4, p);
    CHECK(r.all_moves_legal);
    CHECK(r.paths == 6);  // ordered pairs of distinct states
    CHECK(r.max_length == 1);
    CHECK(std::isfinite(r.rho));
    CHECK(r.bound == doctest::Approx(2 * r.rho * std::log(3.0)));
    const ChainDiagnostics d = diagnostics_from_matrix(p);
    REQUIRE(d.tau_mix_empirical.has_value());
    CHECK(*d.tau_mix_empirical <= r.bound);
}
