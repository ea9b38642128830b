#pragma once

#include <cstdint>
#include <vector>

#include "kswitch/graph.hpp"
#include "kswitch/rational.hpp"

namespace kswitch {

/// Vertex classes of the G(k,p,gamma,n) family: X holds the cycles, Y is joined to X and Z.
struct GFamilyParts {
    std::vector<Vertex> x;
    std::vector<Vertex> y;
    std::vector<Vertex> z;
};

GFamilyParts g_family_parts(int k, int p, Rational gamma, int n);

/// p disjoint C_{2(k+1)} on X, Y complete to X and Z, Y and Z independent.
Graph gen_G_family(int k, int p, Rational gamma, int n);

struct GFamilyBipParts {
    std::vector<Vertex> x1, y1, z1;
    std::vector<Vertex> x2, y2, z2;
};

GFamilyBipParts g_family_bip_parts(int k, int p, Rational gamma, int n);

/// Bipartite analogue on 2n vertices; Y_i is complete to X_{3-i} and Z_{3-i}.
Graph gen_G_family_bip(int k, int p, Rational gamma, int n);

/// Layers X_1..X_{k+1} of F(k,n), in vertex order.
std::vector<std::vector<Vertex>> f_layers(int k, int n);

/// Layered graph: end layers are cliques, consecutive layers complete bipartite.
Graph gen_F(int k, int n);

/// Edges inside X_1 of F(k,n).
std::vector<Edge> f_e1_edges(int k, int n);

/// Blow-up classes B_1..B_{2(k+1)} of F_bip(k,n); odd classes lie on the left side.
std::vector<std::vector<Vertex>> f_bip_blocks(int k, int n);

/// Blow-up of C_{2(k+1)} into independent sets, 2n vertices.
Graph gen_F_bip(int k, int n);

/// Edges between the first two blow-up classes of F_bip(k,n).
std::vector<Edge> f_bip_e1_edges(int k, int n);

/// c disjoint cycles of length 2k+2, each on consecutive labels.
Graph gen_cycle_union(int k, int c, bool bipartite = false);

/// Random graph with minimum degree at least delta. For bipartite graphs n is the side size.
Graph gen_random_min_degree(int n, int delta, bool bipartite, std::uint64_t seed);

}  // namespace kswitch
