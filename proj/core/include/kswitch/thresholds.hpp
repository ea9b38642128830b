#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kswitch/graph.hpp"
#include "kswitch/rational.hpp"
#include "kswitch/switch_graph.hpp"

namespace kswitch {

enum class Property { Connect, Giant, NoIso, Thaw, Cluster };

std::string_view to_string(Property p);
Property parse_property(std::string_view name);

struct ThresholdReport {
    bool connect = true;
    bool giant = true;
    bool noiso = true;
    bool thaw = true;
    bool cluster = true;
    PropertyReport report;

    bool holds(Property p) const;
};

/// Evaluate the five switch-graph properties with parameter c > 1:
/// giant: a component holds at least |H|/c vertices;
/// thaw: every component has at least (matching size)/c non-frozen edges;
/// cluster: fewer than c^n components (n = side size for bipartite graphs).
/// An empty switch graph satisfies all of them.
ThresholdReport evaluate_thresholds(const SwitchGraph& h, const Graph& g, double c);
ThresholdReport evaluate_thresholds(const Graph& g, int k, Rational gamma, double c);

struct ScanStrategy {
    enum class Kind { Exhaustive, Random } kind = Kind::Exhaustive;
    std::uint64_t seed = 0;
    int trials = 20;
    /// Extra graphs tried at every delta they qualify for (random strategy only).
    std::vector<Graph> pool;
};

struct ScanRow {
    int n = 0;
    int k = 0;
    Rational gamma{1};
    int delta = 0;
    Property property = Property::Connect;
    bool witness_found = false;
    std::optional<Graph> witness;
};

/// For each delta, search for a graph with minimum degree >= delta violating the property.
/// Exhaustive search is limited to n <= 6 (general) or n <= 4 per side (bipartite).
std::vector<ScanRow> scan_threshold(int n, int k, Rational gamma, Property prop, double c,
                                    bool bipartite, const ScanStrategy& strategy);

/// Known constructions of the right order, used to seed random scans.
std::vector<Graph> family_pool(int n, int k, bool bipartite);

}  // namespace kswitch
