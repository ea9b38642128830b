#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kswitch/errors.hpp"
#include "kswitch/graph.hpp"
#include "kswitch/matching.hpp"

namespace kswitch {

/// One move: drop `removed`, insert `added`. Both lists are canonical and equally long.
struct SwitchStep {
    std::vector<Edge> removed;
    std::vector<Edge> added;

    /// Number of edges exchanged (the j of a j-switch).
    int size_class() const { return static_cast<int>(removed.size()); }

    friend bool operator==(const SwitchStep&, const SwitchStep&) = default;
};

struct ReconfigPath {
    Matching start;
    Matching end;
    std::vector<SwitchStep> steps;
    int k = 4;
};

/// Step turning a into b.
SwitchStep step_between(const Matching& a, const Matching& b);

/// Apply a step; throws InvalidStep if a removed edge is missing, an added edge
/// is not in g, or the result is not a matching.
Matching apply_step(const Graph& g, const Matching& m, const SwitchStep& step);

/// Switch along a closed walk whose edges alternate between m and non-m edges.
/// The walk may start on either class. Throws InvalidStep otherwise.
SwitchStep cycle_switch(const Graph& g, const Matching& m, const std::vector<Vertex>& cycle);

/// Thrown when no move of the ladder applies; carries the two frontier matchings.
class NoMoveFoundError : public Error {
public:
    NoMoveFoundError(const std::string& message, Matching front, Matching back)
        : Error(ErrorCode::NoMoveFound, message), front_(std::move(front)), back_(std::move(back)) {}
    const Matching& front() const { return front_; }
    const Matching& back() const { return back_; }

private:
    Matching front_;
    Matching back_;
};

/// Degree-sum hypothesis for 4-switch reconfiguration at this matching size:
/// Ore >= 2|M| + 1 (general) or Ore >= |M| (bipartite).
bool four_switch_hypothesis(const Graph& g, int matching_size);
/// Hypothesis for splitting 4-switches: Ore >= n+3, bipartite Ore >= n+1.
bool refine_4_to_3_hypothesis(const Graph& g);
/// Hypothesis for splitting 3-switches: Ore >= floor(4n/3)+1 (bipartite: floor(4n/3)+1 on a side of n).
bool refine_3_to_2_hypothesis(const Graph& g);
/// Minimum degree bound under which H_k is connected for k = 2 or 3.
bool k_switch_degree_hypothesis(const Graph& g, int k);

/// Path of at most-4-switches between two matchings of equal size.
/// Each step strictly shrinks the symmetric difference of the two frontiers;
/// steps may be taken from either end. Throws NoMoveFoundError when stuck.
ReconfigPath four_switch_path(const Graph& g, const Matching& from, const Matching& to);

/// Split a 4-switch whose support is an 8-cycle into at most three steps of size <= 3.
/// Steps of size <= 3 are returned unchanged. Throws PatternNotFound.
std::vector<SwitchStep> refine_4_to_3(const Graph& g, const Matching& m, const SwitchStep& step);

/// Split a 3-switch whose support is a 6-cycle into at most four 2-switches.
/// Steps of size <= 2 are returned unchanged. Throws PatternNotFound.
std::vector<SwitchStep> refine_3_to_2(const Graph& g, const Matching& m, const SwitchStep& step);

/// four_switch_path followed by refinement down to size-k steps (k in 2..4).
ReconfigPath k_switch_path(const Graph& g, const Matching& from, const Matching& to, int k);

enum class Violation {
    None,
    StartMismatch,
    RemovedNotPresent,
    NonEdge,
    NotAMatching,
    SizeChanged,
    ExceedsK,
    EmptyStep,
    EndpointMismatch,
};

std::string_view to_string(Violation v);

struct PathCheck {
    bool valid = true;
    Violation violation = Violation::None;
    /// Index of the offending step, or -1.
    int step = -1;
    std::string message;
};

PathCheck validate_path(const Graph& g, const ReconfigPath& path);

}  // namespace kswitch
