#pragma once

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "kswitch/chain.hpp"
#include "kswitch/digraph.hpp"
#include "kswitch/graph.hpp"
#include "kswitch/matching.hpp"
#include "kswitch/reconfig.hpp"
#include "kswitch/switch_graph.hpp"
#include "kswitch/thresholds.hpp"

namespace kswitch {

using Json = nlohmann::ordered_json;

// Readers throw ParseError on malformed input; graph and matching readers also
// surface validation errors from Graph::build and Matching::from_edges.

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const Matching& m);
Matching matching_from_json(const Graph& g, const Json& j);

Json to_json(const SwitchStep& s);
Json to_json(const ReconfigPath& p);
ReconfigPath path_from_json(const Graph& g, const Json& j);

Json to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j);

Json to_json(const PropertyReport& r);
Json to_json(const ThresholdReport& r);
Json to_json(const ChainDiagnostics& d);
Json to_json(const PathCheck& c);

/// Columns n,k,gamma,delta,property,witness_found,witness_file.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows,
                    const std::vector<std::string>& witness_files);

/// Columns step,matching_index.
void write_trajectory_csv(std::ostream& out, const std::vector<std::pair<std::uint64_t, std::size_t>>& trajectory);

}  // namespace kswitch
