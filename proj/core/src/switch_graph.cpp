#include "kswitch/switch_graph.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "kswitch/dsu.hpp"
#include "kswitch/errors.hpp"

namespace kswitch {

int matching_size_for(const Graph& g, Rational gamma) {
    if (gamma <= Rational(0) || gamma > Rational(1))
        throw Error(ErrorCode::InvalidArgument, "gamma must lie in (0,1]");
    if (g.is_bipartite()) {
        const auto s = gamma.times_integer(g.half_order());
        if (!s) throw Error(ErrorCode::DivisibilityViolation, "gamma*n is not an integer");
        return static_cast<int>(*s);
    }
    const auto s = gamma.times_integer(g.order());
    if (!s || *s % 2 != 0)
        throw Error(ErrorCode::DivisibilityViolation, "gamma*n/2 is not an integer");
    return static_cast<int>(*s / 2);
}

SwitchGraph SwitchGraph::build(const Graph& g, int matching_size, int k, const Options& opts) {
    return from_matchings(g, enumerate_matchings(g, matching_size, opts.cap), k, opts.threads);
}

SwitchGraph SwitchGraph::build(const Graph& g, int matching_size, int k) {
    return build(g, matching_size, k, Options{});
}

SwitchGraph SwitchGraph::from_matchings(const Graph& g, std::vector<Matching> matchings, int k,
                                        unsigned threads) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
    SwitchGraph h;
    h.k_ = k;
    h.edges_ = g.edges();
    std::sort(matchings.begin(), matchings.end());
    matchings.erase(std::unique(matchings.begin(), matchings.end()), matchings.end());
    h.size_ = matchings.empty() ? 0 : static_cast<int>(matchings.front().size());
    for (const Matching& m : matchings)
        if (static_cast<int>(m.size()) != h.size_)
            throw Error(ErrorCode::InvalidArgument, "matchings of different sizes");
    h.matchings_ = std::move(matchings);
    h.words_ = std::max<std::size_t>(1, (h.edges_.size() + 63) / 64);
    h.bits_.assign(h.matchings_.size() * h.words_, 0);
    for (std::size_t i = 0; i < h.matchings_.size(); ++i) {
        for (const Edge& e : h.matchings_[i].edges()) {
            const int id = g.edge_id(e.u, e.v);
            if (id < 0) throw Error(ErrorCode::InvalidMatching, "matching edge missing from graph");
            h.bits_[i * h.words_ + id / 64] |= std::uint64_t{1} << (id % 64);
        }
    }
    h.stream_pairs(std::max(1U, threads));
    return h;
}

void SwitchGraph::stream_pairs(unsigned threads) {
    const std::size_t omega = matchings_.size();
    const std::size_t words = words_;
    // Adjacent iff the number of shared edges is at least size - k.
    const int need = size_ - k_;
    constexpr std::size_t kBlock = 64;
    const std::size_t blocks = (omega + kBlock - 1) / kBlock;

    struct Partial {
        DisjointSets dsu;
        std::vector<std::size_t> degree;
    };
    std::vector<Partial> partials;
    partials.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) partials.push_back({DisjointSets(omega), std::vector<std::size_t>(omega, 0)});

    auto work = [&](unsigned t) {
        Partial& part = partials[t];
        for (std::size_t bi = t; bi < blocks; bi += threads) {
            const std::size_t i0 = bi * kBlock;
            const std::size_t i1 = std::min(omega, i0 + kBlock);
            for (std::size_t bj = bi; bj < blocks; ++bj) {
                const std::size_t j0 = bj * kBlock;
                const std::size_t j1 = std::min(omega, j0 + kBlock);
                for (std::size_t i = i0; i < i1; ++i) {
                    const std::uint64_t* a = bits_.data() + i * words;
                    for (std::size_t j = std::max(j0, i + 1); j < j1; ++j) {
                        const std::uint64_t* b = bits_.data() + j * words;
                        int common = 0;
                        for (std::size_t w = 0; w < words; ++w) common += std::popcount(a[w] & b[w]);
                        if (common >= need) {
                            ++part.degree[i];
                            ++part.degree[j];
                            part.dsu.unite(i, j);
                        }
                    }
                }
            }
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    // Merge in thread order; the resulting partition does not depend on the order.
    DisjointSets dsu(omega);
    degree_.assign(omega, 0);
    for (Partial& part : partials) {
        for (std::size_t i = 0; i < omega; ++i) {
            degree_[i] += part.degree[i];
            dsu.unite(i, part.dsu.find(i));
        }
    }

    label_.assign(omega, -1);
    members_.clear();
    std::vector<int> root_label(omega, -1);
    for (std::size_t i = 0; i < omega; ++i) {
        const std::size_t r = dsu.find(i);
        if (root_label[r] < 0) {
            root_label[r] = static_cast<int>(members_.size());
            members_.emplace_back();
        }
        label_[i] = root_label[r];
        members_[label_[i]].push_back(i);
    }
}

std::optional<std::size_t> SwitchGraph::index_of(const Matching& m) const {
    auto it = std::lower_bound(matchings_.begin(), matchings_.end(), m);
    if (it == matchings_.end() || !(*it == m)) return std::nullopt;
    return static_cast<std::size_t>(it - matchings_.begin());
}

int SwitchGraph::distance(std::size_t i, std::size_t j) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    int diff = 0;
    for (std::size_t w = 0; w < words_; ++w) diff += std::popcount(a[w] ^ b[w]);
    return diff;
}

bool SwitchGraph::adjacent(std::size_t i, std::size_t j) const {
    const int d = distance(i, j);
    return d > 0 && d <= 2 * k_;
}

std::vector<std::size_t> SwitchGraph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < matchings_.size(); ++j)
        if (j != i && adjacent(i, j)) out.push_back(j);
    return out;
}

std::vector<Edge> SwitchGraph::frozen_edges(int component) const {
    const auto& members = members_.at(component);
    std::vector<std::uint64_t> acc(row(members.front()), row(members.front()) + words_);
    for (std::size_t i : members)
        for (std::size_t w = 0; w < words_; ++w) acc[w] &= row(i)[w];
    std::vector<Edge> out;
    for (std::size_t w = 0; w < words_; ++w)
        for (std::uint64_t m = acc[w]; m; m &= m - 1) out.push_back(edges_[w * 64 + std::countr_zero(m)]);
    return out;
}

PropertyReport property_report(const SwitchGraph& h) {
    PropertyReport r;
    r.num_components = h.num_components();
    r.connected = r.num_components <= 1;
    std::size_t largest = 0;
    r.min_nonfrozen_edges = h.matching_size();
    for (int c = 0; c < h.num_components(); ++c) {
        const std::size_t sz = h.components()[c].size();
        r.component_sizes.push_back(sz);
        largest = std::max(largest, sz);
        const int frozen = static_cast<int>(h.frozen_edges(c).size());
        r.frozen_counts.push_back(frozen);
        r.min_nonfrozen_edges = std::min(r.min_nonfrozen_edges, h.matching_size() - frozen);
    }
    for (std::size_t i = 0; i < h.order(); ++i)
        if (h.degree(i) == 0) ++r.isolated;
    r.max_fraction = h.order() == 0 ? 1.0 : static_cast<double>(largest) / static_cast<double>(h.order());
    return r;
}

}  // namespace kswitch
