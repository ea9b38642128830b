#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kswitch/enumerate.hpp"
#include "kswitch/graph.hpp"
#include "kswitch/matching.hpp"
#include "kswitch/rational.hpp"

namespace kswitch {

/// Number of matching edges for a size parameter gamma: gamma*n/2 on a general
/// graph with n vertices, gamma*n on a bipartite graph with n vertices per side.
/// Throws DivisibilityViolation when this is not an integer.
int matching_size_for(const Graph& g, Rational gamma);

/// Graph on the matchings of one size, two matchings adjacent when their
/// symmetric difference has between 1 and 2k edges.
///
/// Adjacency is not stored. Degrees and connected components are computed in
/// one streamed all-pairs pass over packed edge-incidence bitsets.
class SwitchGraph {
public:
    struct Options {
        std::uint64_t cap = kDefaultEnumerationCap;
        unsigned threads = 1;
    };

    static SwitchGraph build(const Graph& g, int matching_size, int k, const Options& opts);
    static SwitchGraph build(const Graph& g, int matching_size, int k);
    static SwitchGraph from_matchings(const Graph& g, std::vector<Matching> matchings, int k,
                                      unsigned threads = 1);

    int k() const { return k_; }
    int matching_size() const { return size_; }
    std::size_t order() const { return matchings_.size(); }
    const std::vector<Matching>& matchings() const { return matchings_; }
    const Matching& matching(std::size_t i) const { return matchings_[i]; }
    std::optional<std::size_t> index_of(const Matching& m) const;

    /// |M_i xor M_j| from the bitsets.
    int distance(std::size_t i, std::size_t j) const;
    bool adjacent(std::size_t i, std::size_t j) const;
    std::vector<std::size_t> neighbors(std::size_t i) const;
    std::size_t degree(std::size_t i) const { return degree_[i]; }

    /// Component label of each vertex; labels are numbered by smallest member.
    const std::vector<int>& component_labels() const { return label_; }
    int num_components() const { return static_cast<int>(members_.size()); }
    const std::vector<std::vector<std::size_t>>& components() const { return members_; }
    bool same_component(std::size_t i, std::size_t j) const { return label_[i] == label_[j]; }

    /// Edges common to every matching of a component.
    std::vector<Edge> frozen_edges(int component) const;

    const std::vector<Edge>& graph_edges() const { return edges_; }

private:
    void stream_pairs(unsigned threads);
    const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

    int k_ = 0;
    int size_ = 0;
    std::vector<Edge> edges_;
    std::vector<Matching> matchings_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::size_t> degree_;
    std::vector<int> label_;
    std::vector<std::vector<std::size_t>> members_;
};

struct PropertyReport {
    bool connected = true;
    int num_components = 0;
    std::vector<std::size_t> component_sizes;
    std::size_t isolated = 0;
    std::vector<int> frozen_counts;
    double max_fraction = 1.0;
    int min_nonfrozen_edges = 0;
};

PropertyReport property_report(const SwitchGraph& h);

}  // namespace kswitch
