#include <doctest.h>

#include "helpers.hpp"
#include "kswitch/enumerate.hpp"
#include "kswitch/generators.hpp"
#include "kswitch/instances.hpp"
#include "kswitch/reconfig.hpp"
#include "kswitch/rng.hpp"
#include "kswitch/switch_graph.hpp"

using namespace kswitch;
using testing::error_of;

namespace {

Matching M(const Graph& g, std::vector<Edge> edges) { return Matching::from_edges(g, std::move(edges)); }

Matching replay(const Graph& g, Matching m, const std::vector<SwitchStep>& steps) {
    for (const SwitchStep& s : steps) m = apply_step(g, m, s);
    return m;
}

// Graph made of the cycle 0..len-1 plus the edge xy, with x and y joined to every cycle vertex.
Graph cycle_with_hub_edge(int len) {
    const Vertex x = len;
    const Vertex y = len + 1;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < len; ++v) {
        edges.push_back(make_edge(v, (v + 1) % len));
        edges.push_back({v, x});
        edges.push_back({v, y});
    }
    edges.push_back({x, y});
    return Graph::build(len + 2, edges);
}

}  // namespace

TEST_CASE("apply_step and step_between") {
    const Graph k4 = complete_graph(4);
    const Matching a = M(k4, {{0, 1}, {2, 3}});
    const Matching b = M(k4, {{0, 2}, {1, 3}});
    const SwitchStep s = step_between(a, b);
    CHECK(s.size_class() == 2);
    CHECK(apply_step(k4, a, s) == b);
    CHECK(error_of([&] { apply_step(k4, b, s); }) == ErrorCode::InvalidStep);
    const Graph c4 = cycle_graph(4);
    CHECK(error_of([&] { apply_step(c4, M(c4, {{0, 1}, {2, 3}}), s); }) == ErrorCode::InvalidStep);
}

TEST_CASE("cycle_switch accepts either starting class") {
    const Graph k4 = complete_graph(4);
    const Matching a = M(k4, {{0, 1}, {2, 3}});
    CHECK(apply_step(k4, a, cycle_switch(k4, a, {0, 1, 2, 3})) == M(k4, {{0, 3}, {1, 2}}));
    CHECK(apply_step(k4, a, cycle_switch(k4, a, {1, 2, 3, 0})) == M(k4, {{0, 3}, {1, 2}}));
    CHECK(error_of([&] { cycle_switch(k4, a, {0, 2, 1, 3}); }) == ErrorCode::InvalidStep);
}

TEST_CASE("four-switch paths on K6") {
    const Graph k6 = complete_graph(6);
    const Matching s = M(k6, {{0, 1}, {2, 3}, {4, 5}});
    const ReconfigPath p1 = four_switch_path(k6, s, M(k6, {{0, 2}, {1, 3}, {4, 5}}));
    REQUIRE(p1.steps.size() == 1);
    CHECK(p1.steps[0].size_class() == 2);
    const ReconfigPath p2 = four_switch_path(k6, s, M(k6, {{0, 2}, {1, 4}, {3, 5}}));
    REQUIRE(p2.steps.size() == 1);
    CHECK(p2.steps[0].size_class() == 3);
    CHECK(four_switch_path(k6, s, s).steps.empty());
    CHECK(k_switch_path(k6, s, s, 2).steps.empty());
}

TEST_CASE("a six-cycle is one four-switch step") {
    const Graph c6 = cycle_graph(6);
    const auto ms = enumerate_perfect_matchings(c6);
    const ReconfigPath p = four_switch_path(c6, ms[0], ms[1]);
    REQUIRE(p.steps.size() == 1);
    CHECK(p.steps[0].size_class() == 3);
    CHECK(validate_path(c6, p).valid);
}

TEST_CASE("a ten-cycle leaves the ladder stuck") {
    const Graph c10 = cycle_graph(10);
    const auto ms = enumerate_perfect_matchings(c10);
    REQUIRE(ms.size() == 2);
    bool thrown = false;
    try {
        four_switch_path(c10, ms[0], ms[1]);
    } catch (const NoMoveFoundError& e) {
        thrown = true;
        CHECK(e.code() == ErrorCode::NoMoveFound);
        CHECK(hamming(e.front(), e.back()) == 10);
    }
    CHECK(thrown);
}

TEST_CASE("four-switch paths stay within the Hamming distance") {
    Rng rng(9);
    int paths = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const bool bip = seed % 3 == 0;
        const int n = bip ? 5 : 10;
        const Graph g = gen_random_min_degree(n, bip ? 3 : 6, bip, seed);
        const int size = bip ? n - static_cast<int>(seed % 2) : n / 2 - static_cast<int>(seed % 2);
        if (!four_switch_hypothesis(g, size)) continue;
        const auto ms = enumerate_matchings(g, size);
        for (int t = 0; t < 6; ++t) {
            const Matching& a = ms[rng.uniform(ms.size())];
            const Matching& b = ms[rng.uniform(ms.size())];
            const ReconfigPath p = four_switch_path(g, a, b);
            CHECK(validate_path(g, p).valid);
            CHECK(static_cast<int>(p.steps.size()) <= hamming(a, b));
            for (const SwitchStep& s : p.steps) CHECK(s.size_class() <= 4);
            ++paths;
        }
    }
    CHECK(paths > 100);
}

TEST_CASE("four-switch paths between partial matchings of K10") {
    const Graph k10 = complete_graph(10);
    const auto ms = enumerate_matchings(k10, 3);
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        const Matching& a = ms[rng.uniform(ms.size())];
        const Matching& b = ms[rng.uniform(ms.size())];
        const ReconfigPath p = four_switch_path(k10, a, b);
        const PathCheck c = validate_path(k10, p);
        CHECK(c.valid);
        CHECK(static_cast<int>(p.steps.size()) <= hamming(a, b));
    }
}

TEST_CASE("refining a four-switch on K8 uses an even chord") {
    const Graph k8 = complete_graph(8);
    const Matching m = M(k8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    const Matching target = M(k8, {{1, 2}, {3, 4}, {5, 6}, {0, 7}});
    const auto steps = refine_4_to_3(k8, m, step_between(m, target));
    CHECK(steps.size() == 2);
    for (const SwitchStep& s : steps) CHECK(s.size_class() <= 3);
    CHECK(replay(k8, m, steps) == target);
}

TEST_CASE("refinement passes small steps through") {
    const Graph k8 = complete_graph(8);
    const Matching m = M(k8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    const SwitchStep four = step_between(m, M(k8, {{0, 2}, {1, 3}, {4, 5}, {6, 7}}));
    CHECK(refine_4_to_3(k8, m, four) == std::vector<SwitchStep>{four});
    CHECK(refine_3_to_2(k8, m, four) == std::vector<SwitchStep>{four});
    const SwitchStep six = step_between(m, M(k8, {{1, 2}, {3, 4}, {0, 5}, {6, 7}}));
    CHECK(refine_4_to_3(k8, m, six) == std::vector<SwitchStep>{six});
}

TEST_CASE("a step whose support is two cycles is not refined") {
    const Graph k8 = complete_graph(8);
    const Matching m = M(k8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    const SwitchStep two_squares = step_between(m, M(k8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}));
    CHECK(error_of([&] { refine_4_to_3(k8, m, two_squares); }) == ErrorCode::PatternNotFound);
}

TEST_CASE("refining a three-switch") {
    const Graph k6 = complete_graph(6);
    const Matching m = M(k6, {{0, 1}, {2, 3}, {4, 5}});
    const Matching target = M(k6, {{1, 2}, {3, 4}, {0, 5}});
    const auto steps = refine_3_to_2(k6, m, step_between(m, target));
    CHECK(steps.size() == 2);
    for (const SwitchStep& s : steps) CHECK(s.size_class() == 2);
    CHECK(replay(k6, m, steps) == target);

    const Graph c6 = cycle_graph(6);
    const auto ms = enumerate_perfect_matchings(c6);
    CHECK(error_of([&] { refine_3_to_2(c6, ms[0], step_between(ms[0], ms[1])); }) == ErrorCode::PatternNotFound);
}

TEST_CASE("chordless cycles with an outside edge") {
    const Graph g6 = cycle_with_hub_edge(6);
    const Matching m6 = M(g6, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    const Matching t6 = M(g6, {{1, 2}, {3, 4}, {0, 5}, {6, 7}});
    const auto s6 = refine_3_to_2(g6, m6, step_between(m6, t6));
    CHECK(s6.size() == 4);
    for (const SwitchStep& s : s6) CHECK(s.size_class() == 2);
    CHECK(replay(g6, m6, s6) == t6);

    const Graph g8 = cycle_with_hub_edge(8);
    const Matching m8 = M(g8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
    const Matching t8 = M(g8, {{1, 2}, {3, 4}, {5, 6}, {0, 7}, {8, 9}});
    const auto s8 = refine_4_to_3(g8, m8, step_between(m8, t8));
    CHECK(s8.size() == 3);
    for (const SwitchStep& s : s8) CHECK(s.size_class() <= 3);
    CHECK(replay(g8, m8, s8) == t8);
}

TEST_CASE("generated refinement instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RefineInstanceOptions opts;
        opts.cycle_length = seed % 2 == 0 ? 8 : 6;
        opts.bipartite = seed % 4 >= 2;
        opts.n = opts.bipartite ? (opts.cycle_length == 8 ? 6 : 5) : (opts.cycle_length == 8 ? 10 : 8);
        opts.chordless = seed % 3 == 0;
        const RefineInstance inst = gen_refine_instance(opts, seed);
        CHECK(inst.step.size_class() == opts.cycle_length / 2);
        const Matching target = apply_step(inst.graph, inst.matching, inst.step);
        const auto steps = opts.cycle_length == 8 ? refine_4_to_3(inst.graph, inst.matching, inst.step)
                                                  : refine_3_to_2(inst.graph, inst.matching, inst.step);
        CHECK(steps.size() <= (opts.cycle_length == 8 ? 3U : 4U));
        if (inst.chordless) CHECK(steps.size() == (opts.cycle_length == 8 ? 3U : 4U));
        for (const SwitchStep& s : steps) CHECK(s.size_class() <= opts.cycle_length / 2 - 1);
        CHECK(replay(inst.graph, inst.matching, steps) == target);
    }
}

TEST_CASE("k-switch paths on complete graphs") {
    const Graph k6 = complete_graph(6);
    const auto ms = enumerate_perfect_matchings(k6);
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j) {
            const ReconfigPath p = k_switch_path(k6, ms[i], ms[j], 2);
            CHECK(p.k == 2);
            CHECK(validate_path(k6, p).valid);
        }
    const Graph k44 = complete_bipartite(4);
    const auto bs = enumerate_perfect_matchings(k44);
    for (std::size_t i = 0; i < bs.size(); i += 3)
        for (std::size_t j = 0; j < bs.size(); j += 2) {
            const ReconfigPath p = k_switch_path(k44, bs[i], bs[j], 3);
            CHECK(validate_path(k44, p).valid);
            for (const SwitchStep& s : p.steps) CHECK(s.size_class() <= 3);
        }
}

TEST_CASE("k-switch paths fail across components of F") {
    const Graph f = gen_F(2, 12);
    const SwitchGraph h = SwitchGraph::build(f, 6, 2);
    REQUIRE(h.num_components() > 1);
    const std::size_t a = h.components()[0].front();
    const std::size_t b = h.components()[1].front();
    const auto code = error_of([&] { k_switch_path(f, h.matching(a), h.matching(b), 2); });
    REQUIRE(code.has_value());
    CHECK((*code == ErrorCode::NoMoveFound || *code == ErrorCode::PatternNotFound));
}

TEST_CASE("path validation diagnoses the first violation") {
    const Graph c6 = cycle_graph(6);
    const Graph k6 = complete_graph(6);
    const Matching s = M(k6, {{0, 1}, {2, 3}, {4, 5}});
    const Matching t = M(k6, {{0, 2}, {1, 3}, {4, 5}});
    ReconfigPath p{s, t, {step_between(s, t)}, 2};
    CHECK(validate_path(k6, p).valid);

    const PathCheck nonedge = validate_path(c6, p);
    CHECK_FALSE(nonedge.valid);
    CHECK(nonedge.violation == Violation::NonEdge);
    CHECK(nonedge.step == 0);

    ReconfigPath wrong_end = p;
    wrong_end.end = M(k6, {{0, 3}, {1, 2}, {4, 5}});
    CHECK(validate_path(k6, wrong_end).violation == Violation::EndpointMismatch);

    const Matching far = M(k6, {{0, 2}, {1, 4}, {3, 5}});
    ReconfigPath big{s, far, {step_between(s, far)}, 2};
    CHECK(validate_path(k6, big).violation == Violation::ExceedsK);

    ReconfigPath missing{t, t, {step_between(s, t)}, 2};
    CHECK(validate_path(k6, missing).violation == Violation::RemovedNotPresent);
}

TEST_CASE("degree hypotheses") {
    CHECK(k_switch_degree_hypothesis(complete_graph(6), 2));
    CHECK_FALSE(k_switch_degree_hypothesis(cycle_graph(6), 2));
    CHECK(k_switch_degree_hypothesis(complete_bipartite(4), 3));
    CHECK_FALSE(k_switch_degree_hypothesis(gen_F(2, 12), 2));
    CHECK(refine_3_to_2_hypothesis(complete_graph(6)));
    CHECK_FALSE(refine_3_to_2_hypothesis(cycle_graph(6)));
    CHECK(refine_4_to_3_hypothesis(complete_graph(8)));
    CHECK(four_switch_hypothesis(complete_graph(8), 4));
}
