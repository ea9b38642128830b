#pragma once

// Deliberately naive reference implementations. None of them call into the
// enumeration, switch-graph or permanent code they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "kswitch/graph.hpp"

namespace oracle {

using kswitch::Edge;
using kswitch::Graph;
using kswitch::Vertex;
using EdgeSet = std::vector<Edge>;

/// All matchings with `size` edges, by include/exclude recursion over the edge list.
inline std::vector<EdgeSet> matchings_by_edge_subsets(const Graph& g, int size) {
    const std::vector<Edge>& edges = g.edges();
    std::vector<EdgeSet> out;
    EdgeSet cur;
    std::vector<char> used(g.order(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        if (edges.size() - i < static_cast<std::size_t>(size) - cur.size()) return;
        const Edge e = edges[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            cur.push_back(e);
            rec(i + 1);
            cur.pop_back();
            used[e.u] = used[e.v] = 0;
        }
        rec(i + 1);
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<EdgeSet> perfect_matchings(const Graph& g) {
    if (g.order() % 2 != 0) return {};
    return matchings_by_edge_subsets(g, g.order() / 2);
}

inline int symdiff_size(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet d;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
    return static_cast<int>(d.size());
}

/// Component label per matching (numbered by smallest member) of the graph joining
/// matchings at symmetric difference between 1 and 2k, by BFS over an explicit adjacency list.
inline std::vector<int> switch_components_bfs(const std::vector<EdgeSet>& ms, int k) {
    const std::size_t n = ms.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const int d = symdiff_size(ms[i], ms[j]);
            if (d > 0 && d <= 2 * k) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    std::vector<int> label(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        std::queue<std::size_t> q;
        q.push(s);
        label[s] = next;
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj[u])
                if (label[v] < 0) {
                    label[v] = next;
                    q.push(v);
                }
        }
        ++next;
    }
    return label;
}

inline int count_labels(const std::vector<int>& label) {
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

/// Permanent of the biadjacency matrix of a bipartite graph, summing over all permutations.
inline std::uint64_t permanent_by_permutations(const Graph& g) {
    const auto& left = g.bipartition().left;
    const auto& right = g.bipartition().right;
    std::vector<int> perm(right.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t total = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < left.size() && ok; ++i) ok = g.adjacent(left[i], right[perm[i]]);
        total += ok ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Double factorial (n-1)!! for even n.
inline std::uint64_t odd_double_factorial(int n) {
    std::uint64_t r = 1;
    for (int i = n - 1; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
    return r;
}

/// Minimum degree straight from the adjacency relation.
inline int min_degree(const Graph& g) {
    int best = g.order();
    for (Vertex u = 0; u < g.order(); ++u) {
        int d = 0;
        for (Vertex v = 0; v < g.order(); ++v) d += g.adjacent(u, v) ? 1 : 0;
        best = std::min(best, d);
    }
    return best;
}

}  // namespace oracle
