#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kswitch/graph.hpp"
#include "kswitch/matching.hpp"
#include "kswitch/reconfig.hpp"
#include "kswitch/rng.hpp"

namespace kswitch {

/// Gamma4 proposes alternating cycles through up to four matching edges;
/// Switch2 and Switch3 truncate the same proposal to two or three edges.
enum class ChainKind { Gamma4, Switch2, Switch3 };

std::string_view to_string(ChainKind kind);
ChainKind parse_chain(std::string_view name);
/// Number of vertices drawn per step (4, 2 or 3).
int draws_per_step(ChainKind kind);

/// Alternating cycle proposed by draws u_1..u_j against the partner array.
///
/// With v_i the partner of u_i, the walk is u_1 v_1 u_2 v_2 ...; it is cut at the
/// first later draw equal to u_1. The proposal is rejected (nullopt) unless the walk
/// is a simple cycle of length at least 4 whose non-matching links are edges of g.
std::optional<std::vector<Vertex>> propose_cycle(const Graph& g, std::span<const Vertex> mate,
                                                 std::span<const Vertex> draws);

/// Flip matching and non-matching edges along the cycle.
void switch_cycle(std::vector<Vertex>& mate, const std::vector<Vertex>& cycle);

/// Vertices the chain samples from: all vertices, or the left side of a bipartite graph.
std::vector<Vertex> sampling_pool(const Graph& g);

/// One lazy step: propose, then switch with probability 1/2.
void chain_step(const Graph& g, ChainKind kind, std::vector<Vertex>& mate, Rng& rng);

Matching gamma_step(const Graph& g, const Matching& m, Rng& rng);
Matching uniform_switch_step(const Graph& g, const Matching& m, int j, Rng& rng);

inline constexpr std::size_t kDefaultOmegaCap = 5000;

/// Exact transition matrix over the perfect matchings. Entry (a,b) equals
/// counts[a*omega+b] / denominator.
struct TransitionMatrix {
    std::vector<Matching> states;
    std::vector<std::uint64_t> counts;
    std::uint64_t denominator = 1;

    std::size_t omega() const { return states.size(); }
    std::uint64_t count(std::size_t a, std::size_t b) const { return counts[a * states.size() + b]; }
    double at(std::size_t a, std::size_t b) const {
        return static_cast<double>(count(a, b)) / static_cast<double>(denominator);
    }
};

enum class MatrixMethod { Auto, Draws, Cycles };

/// Draws: tally every draw sequence literally. Cycles: count, for each pair of states
/// differing on one short alternating cycle, the draw sequences that propose it.
/// Auto uses Draws while omega * pool^j stays within 1e8.
TransitionMatrix exact_transition_matrix(const Graph& g, ChainKind kind, std::size_t omega_cap = kDefaultOmegaCap,
                                         MatrixMethod method = MatrixMethod::Auto);

struct ChainDiagnostics {
    std::size_t omega = 0;
    bool symmetric = false;
    bool rows_stochastic = false;
    double min_diagonal = 0.0;
    std::vector<double> stationary;
    double stationary_residual = 0.0;
    double lambda_star = 0.0;
    double spectral_gap = 0.0;
    /// First t with d(t) < 1/4, if reached within the horizon.
    std::optional<int> tau_mix_empirical;
    std::vector<std::pair<int, double>> tv_curve;
};

struct DiagnosticsOptions {
    std::size_t omega_cap = kDefaultOmegaCap;
    int t_max = 10000;
    double tolerance = 1e-12;
};

ChainDiagnostics exact_diagnostics(const Graph& g, ChainKind kind, const DiagnosticsOptions& opts = {});
ChainDiagnostics diagnostics_from_matrix(const TransitionMatrix& p, const DiagnosticsOptions& opts = {});

/// d(t) = max over starting states of the total variation distance to the stationary law.
std::vector<std::pair<int, double>> tv_curve(const TransitionMatrix& p, const std::vector<double>& pi, int t_max,
                                             double stop_below = 0.25);

struct SimulationOptions {
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    std::optional<Matching> start;
    /// Record (step, state index) pairs; requires enumerable state space.
    bool record_trajectory = false;
    std::size_t omega_cap = kDefaultOmegaCap;
};

struct SimulationSummary {
    Matching final_matching;
    std::uint64_t accepted_moves = 0;
    /// Visit counts per enumerated state (index into states), including the start.
    std::vector<Matching> states;
    std::vector<std::uint64_t> histogram;
    double chi_square = 0.0;
    std::vector<std::pair<std::uint64_t, std::size_t>> trajectory;
};

/// Run the chain from the start matching (default: the first perfect matching). Throws NoPerfectMatching.
SimulationSummary simulate(const Graph& g, ChainKind kind, const SimulationOptions& opts);

struct CanonicalPath {
    ReconfigPath path;
    /// Ladder case used at each step: "1", "2", "3", "4a", "4b", "5a", "5b", "6a", "6b".
    std::vector<std::string> cases;
};

/// Canonical path from s to t made of single alternating cycles of length at most 8,
/// processing the cycles of s xor t in order of their smallest vertex. Throws CaseLadderStuck.
CanonicalPath canonical_path(const Graph& g, const Matching& s, const Matching& t);

struct CongestionReport {
    double rho = 0.0;
    double bound = 0.0;  // 2 * rho * ln(omega)
    std::size_t paths = 0;
    int max_length = 0;
    bool all_moves_legal = true;
};

/// Congestion of the canonical paths between all ordered pairs, for the Gamma4 chain.
CongestionReport canonical_path_congestion(const Graph& g, const TransitionMatrix& p);

}  // namespace kswitch
