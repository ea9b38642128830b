#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "kswitch/enumerate.hpp"
#include "kswitch/generators.hpp"
#include "kswitch/matching.hpp"
#include "kswitch/rng.hpp"

using namespace kswitch;
using testing::edge_sets;
using testing::error_of;

namespace {

Matching M(const Graph& g, std::vector<Edge> edges) { return Matching::from_edges(g, std::move(edges)); }

// Checks every listed near-perfect matching is mapped injectively; returns how many were mapped.
std::size_t check_injective(const Graph& g) {
    std::set<InjectionImage> seen;
    std::size_t mapped = 0;
    for (const Matching& n : enumerate_matchings(g, g.order() / 2 - 1)) {
        const InjectionImage img = near_perfect_injection(g, n);
        CHECK(is_perfect(g, img.perfect));
        CHECK_FALSE(n.covers(img.pair.u));
        CHECK_FALSE(n.covers(img.pair.v));
        CHECK(seen.insert(img).second);
        ++mapped;
    }
    return mapped;
}

}  // namespace

TEST_CASE("perfect matchings of K_n number (n-1)!!") {
    for (int n = 2; n <= 10; n += 2) {
        const Graph g = complete_graph(n);
        CHECK(enumerate_perfect_matchings(g).size() == oracle::odd_double_factorial(n));
        CHECK(count_perfect(g) == oracle::odd_double_factorial(n));
        CHECK(count_matchings(g, n / 2) == oracle::odd_double_factorial(n));
    }
}

TEST_CASE("small enumeration counts") {
    CHECK(enumerate_matchings(complete_graph(4), 2).size() == 3);
    CHECK(enumerate_matchings(complete_graph(6), 3).size() == 15);
    CHECK(enumerate_matchings(cycle_graph(6), 3).size() == 2);
    CHECK(count_perfect(complete_bipartite(3)) == 6);
    CHECK(count_perfect(gen_cycle_union(2, 2)) == 4);
    CHECK(count_perfect(complete_graph(8)) == 105);
    CHECK(count_perfect(cycle_graph(5)) == 0);
    CHECK(enumerate_matchings(complete_graph(6), 0).size() == 1);
}

TEST_CASE("enumeration matches the edge-subset oracle") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const bool bip = seed % 3 == 0;
        const int n = bip ? 4 : 8;
        const Graph g = gen_random_min_degree(n, 1 + static_cast<int>(seed % 3), bip, seed);
        for (int size = 0; size <= g.order() / 2; ++size) {
            const auto got = enumerate_matchings(g, size);
            CHECK(edge_sets(got) == oracle::matchings_by_edge_subsets(g, size));
            CHECK(std::is_sorted(got.begin(), got.end()));
            CHECK(count_matchings(g, size) == got.size());
        }
    }
}

TEST_CASE("enumeration budget") {
    CHECK(error_of([] { enumerate_perfect_matchings(complete_graph(10), 100); }) ==
          ErrorCode::EnumerationBudgetExceeded);
    CHECK(enumerate_perfect_matchings(complete_graph(10), 945).size() == 945);
}

TEST_CASE("Ryser permanent agrees with the permutation sum on random bipartite graphs") {
    Rng rng(2024);
    for (int t = 0; t < 50; ++t) {
        const int h = 1 + static_cast<int>(rng.uniform(7));
        std::vector<Edge> edges;
        for (int a = 0; a < h; ++a)
            for (int b = 0; b < h; ++b)
                if (rng.bernoulli(0.6)) edges.push_back({a, h + b});
        Bipartition parts;
        for (int i = 0; i < h; ++i) {
            parts.left.push_back(i);
            parts.right.push_back(h + i);
        }
        const Graph g = Graph::build(2 * h, edges, parts);
        const std::uint64_t perm = oracle::permanent_by_permutations(g);
        CHECK(count_perfect(g) == perm);
        CHECK(oracle::perfect_matchings(g).size() == perm);
    }
}

TEST_CASE("permanent of small 0/1 matrices") {
    CHECK(permanent_01({0b11, 0b11}, 2) == 2);
    CHECK(permanent_01({0b111, 0b111, 0b111}, 3) == 6);
    CHECK(permanent_01({0b01, 0b01}, 2) == 0);
    CHECK(permanent_01({0b1}, 1) == 1);
}

TEST_CASE("matching validation") {
    const Graph g = cycle_graph(6);
    CHECK(error_of([&] { M(g, {{0, 1}, {1, 2}}); }) == ErrorCode::InvalidMatching);
    CHECK(error_of([&] { M(g, {{0, 3}}); }) == ErrorCode::InvalidMatching);
    const Matching m = M(g, {{4, 5}, {1, 0}});
    CHECK(m.edges() == std::vector<Edge>{{0, 1}, {4, 5}});
    CHECK(std::popcount(m.matched()) == 2 * static_cast<int>(m.size()));
    const auto mate = m.mates(6);
    CHECK(mate[0] == 1);
    CHECK(mate[2] == -1);
    CHECK(matching_from_mates(mate) == m);
}

TEST_CASE("near-perfect injection examples") {
    const Graph k6 = complete_graph(6);
    const InjectionImage a = near_perfect_injection(k6, M(k6, {{0, 1}, {2, 3}}));
    CHECK(a.pair == Edge{4, 5});
    CHECK(a.perfect == M(k6, {{0, 1}, {2, 3}, {4, 5}}));

    const Graph c6 = cycle_graph(6);
    const InjectionImage b = near_perfect_injection(c6, M(c6, {{1, 2}, {3, 4}}));
    CHECK(b.pair == Edge{0, 5});
    CHECK(b.perfect == M(c6, {{0, 5}, {1, 2}, {3, 4}}));

    CHECK(error_of([&] { near_perfect_injection(k6, M(k6, {{0, 1}})); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("near-perfect injection is injective on qualifying graphs") {
    // K_{3,3} minus a perfect matching: every cross pair has degree sum 4 >= 3.
    std::vector<Edge> edges;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) edges.push_back({a, 3 + b});
    const Graph crown = Graph::build(6, edges, Bipartition{{0, 1, 2}, {3, 4, 5}});
    CHECK(check_injective(crown) == enumerate_matchings(crown, 2).size());

    int graphs = 0;
    for (std::uint64_t seed = 0; graphs < 12 && seed < 400; ++seed) {
        const int n = seed % 2 == 0 ? 6 : 8;
        const Graph g = gen_random_min_degree(n, n / 2 - 1, false, seed);
        if (degree_report(g).ore_general < n - 1) continue;
        const std::size_t near = check_injective(g);
        CHECK(near <= static_cast<std::size_t>(n * n) * count_perfect(g));
        ++graphs;
    }
    CHECK(graphs == 12);
}

TEST_CASE("symmetric difference decomposition") {
    const Graph k4 = complete_graph(4);
    const Matching a = M(k4, {{0, 1}, {2, 3}});
    const SymDiffDecomposition same = symdiff_decompose(4, a, a);
    CHECK(same.hamming == 0);
    CHECK(same.cycles.empty());
    CHECK(same.paths.empty());

    const SymDiffDecomposition four = symdiff_decompose(4, a, M(k4, {{0, 2}, {1, 3}}));
    CHECK(four.hamming == 4);
    REQUIRE(four.cycles.size() == 1);
    CHECK(four.cycles[0].vertices == std::vector<Vertex>{0, 1, 3, 2});

    const Graph k6 = complete_graph(6);
    const SymDiffDecomposition six =
        symdiff_decompose(6, M(k6, {{0, 1}, {2, 3}, {4, 5}}), M(k6, {{0, 2}, {1, 4}, {3, 5}}));
    CHECK(six.hamming == 6);
    REQUIRE(six.cycles.size() == 1);
    CHECK(six.cycles[0].edge_count() == 6);
}

TEST_CASE("decomposition edge counts sum to the Hamming distance") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        const Graph g = gen_random_min_degree(10, 3, false, 100 + t);
        const int size = 2 + t % 4;
        const auto ms = enumerate_matchings(g, size);
        if (ms.size() < 2) continue;
        for (int r = 0; r < 10; ++r) {
            const Matching& x = ms[rng.uniform(ms.size())];
            const Matching& y = ms[rng.uniform(ms.size())];
            const SymDiffDecomposition d = symdiff_decompose(g.order(), x, y);
            int total = 0;
            for (const auto& c : d.cycles) {
                CHECK(c.closed);
                CHECK(c.edge_count() % 2 == 0);
                CHECK(c.edge_count() >= 4);
                for (int i = 0; i < c.edge_count(); ++i) {
                    const Edge e = make_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
                    const bool first_expected = (i % 2 == 0) == c.starts_in_first;
                    CHECK(x.contains(e) == first_expected);
                    CHECK(y.contains(e) == !first_expected);
                }
                total += c.edge_count();
            }
            for (const auto& p : d.paths) total += p.edge_count();
            CHECK(total == d.hamming);
            CHECK(d.hamming == hamming(x, y));
            CHECK(d.hamming == oracle::symdiff_size(x.edges(), y.edges()));
        }
    }
}
