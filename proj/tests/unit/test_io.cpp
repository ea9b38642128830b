#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "kswitch/chain.hpp"
#include "kswitch/enumerate.hpp"
#include "kswitch/generators.hpp"
#include "kswitch/io.hpp"
#include "kswitch/reconfig.hpp"
#include "kswitch/thresholds.hpp"

using namespace kswitch;
using testing::error_of;

TEST_CASE("graph JSON round trip") {
    for (const Graph& g : {gen_F(2, 12), gen_F_bip(2, 7), cycle_graph(5), Graph::build(3, {})}) {
        const Json j = to_json(g);
        const Graph back = graph_from_json(Json::parse(j.dump()));
        CHECK(back == g);
        CHECK(back.family() == g.family());
        CHECK(to_json(back).dump() == j.dump());
    }
    const Json f = to_json(gen_F(2, 12));
    CHECK(f["family"]["name"] == "F");
    CHECK(f["edges"][0] == Json::array({0, 1}));
}

TEST_CASE("graph JSON errors") {
    CHECK(error_of([] { graph_from_json(Json::parse(R"({"edges": []})")); }) == ErrorCode::ParseError);
    CHECK(error_of([] { graph_from_json(Json::parse(R"({"n": 3, "edges": [[0]]})")); }) == ErrorCode::ParseError);
    CHECK(error_of([] { graph_from_json(Json::parse(R"({"n": "x", "edges": []})")); }) == ErrorCode::ParseError);
    CHECK(error_of([] { graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 0]]})")); }) == ErrorCode::SelfLoop);
    CHECK(error_of([] {
              graph_from_json(Json::parse(R"({"n": 4, "edges": [[0, 1]], "bipartition": [[0, 1], [2, 3]]})"));
          }) == ErrorCode::NonCrossingEdge);
}

TEST_CASE("matching and path JSON round trip") {
    const Graph k6 = complete_graph(6);
    const auto ms = enumerate_perfect_matchings(k6);
    const ReconfigPath p = k_switch_path(k6, ms[0], ms[14], 2);
    const Json j = to_json(p);
    CHECK(j.contains("start"));
    CHECK(j.contains("steps"));
    CHECK(j.contains("end"));
    CHECK(j["steps"][0].contains("remove"));
    CHECK(j["steps"][0].contains("add"));
    const ReconfigPath back = path_from_json(k6, Json::parse(j.dump()));
    CHECK(back.start == p.start);
    CHECK(back.end == p.end);
    CHECK(back.steps == p.steps);
    CHECK(back.k == 2);
    CHECK(validate_path(k6, back).valid);

    CHECK(matching_from_json(k6, to_json(ms[3])) == ms[3]);
    CHECK(error_of([&] { matching_from_json(cycle_graph(6), Json::parse(R"({"edges": [[0, 2]]})")); }) ==
          ErrorCode::InvalidMatching);
    CHECK(error_of([&] { path_from_json(k6, Json::parse(R"({"start": {"edges": []}})")); }) ==
          ErrorCode::ParseError);
}

TEST_CASE("digraph JSON round trip") {
    const Digraph d = gen_Hp(7);
    CHECK(digraph_from_json(Json::parse(to_json(d).dump())) == d);
    CHECK(error_of([] { digraph_from_json(Json::parse(R"({"n": 2, "arcs": [[0, 0]]})")); }) == ErrorCode::SelfLoop);
}

TEST_CASE("report field names") {
    const ThresholdReport r = evaluate_thresholds(gen_F(2, 12), 2, Rational(1), 2.0);
    const Json j = to_json(r.report);
    for (const char* key : {"connected", "num_components", "component_sizes", "isolated", "frozen_counts", "max_fraction"})
        CHECK(j.contains(key));
    CHECK(j["connected"] == false);

    const Json d = to_json(exact_diagnostics(complete_graph(4), ChainKind::Gamma4));
    for (const char* key : {"omega", "symmetric", "spectral_gap", "tau_mix_empirical", "tv_curve"}) CHECK(d.contains(key));
    CHECK(d["omega"] == 3);
    CHECK(d["tv_curve"][0][0] == 1);
}

TEST_CASE("CSV writers") {
    ScanRow row;
    row.n = 6;
    row.k = 2;
    row.delta = 2;
    row.witness_found = true;
    std::ostringstream scan;
    write_scan_csv(scan, {row}, {"w.json"});
    CHECK(scan.str() == "n,k,gamma,delta,property,witness_found,witness_file\n6,2,1,2,connect,true,w.json\n");

    std::ostringstream traj;
    write_trajectory_csv(traj, {{0, 2}, {1, 0}});
    CHECK(traj.str() == "step,matching_index\n0,2\n1,0\n");
}
