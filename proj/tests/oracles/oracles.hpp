#pragma once

// Brute-force and alternative-algorithm oracles. Nothing here calls the
// library's search code; graphs are plain 0-based adjacency matrices so the
// oracles can be read on their own.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphicable/algebra.hpp"
#include "graphicable/graph.hpp"

namespace oracle {

using Adj = std::vector<std::vector<char>>;

Adj empty(std::size_t n);
/// 1-based endpoints; adding an existing edge is a no-op.
void add_edge(Adj& a, std::size_t u, std::size_t v);
std::size_t edge_count(const Adj& a);
std::size_t degree(const Adj& a, std::size_t v0);
/// 0-based pairs, u < v, lexicographic.
std::vector<std::pair<std::size_t, std::size_t>> edge_list(const Adj& a);

Adj from_graph(const graphicable::Graph& g);
graphicable::Graph to_graph(const Adj& a);

bool connected(const Adj& a, const std::vector<char>& removed_vertices = {});

// --- constructions straight from the textbook descriptions -----------------

Adj path(std::size_t n);
Adj cycle(std::size_t n);
Adj complete(std::size_t n);
Adj complete_bipartite(std::size_t m, std::size_t n);
Adj complete_multipartite(const std::vector<std::size_t>& parts);
Adj star(std::size_t leaves);
Adj friendship(std::size_t triangles);
Adj wheel(std::size_t n);
/// Outer cycle 1..n, spokes t ~ n+t, inner t ~ t+k.
Adj generalized_petersen_conventional(std::size_t n, std::size_t k);
/// Same graph with outer t at 2t-1 and inner t at 2t.
Adj generalized_petersen_interleaved(std::size_t n, std::size_t k);
/// Kneser graph KG(5,2): 2-subsets of {0..4}, adjacent when disjoint.
Adj petersen_kneser();
/// Petersen (Kneser form) with one vertex blown up into a triangle.
Adj tietze_from_kneser();
/// Flower snark J_n with gadget i at labels 4i..4i+3 (center, b, c, d).
Adj flower_snark(std::size_t n);

// --- structural oracles ------------------------------------------------------

/// Shortest cycle through each edge: remove the edge, BFS between its ends.
std::optional<std::size_t> girth(const Adj& a);
/// Tries every 2-colouring with vertex 0 fixed. n <= 24.
bool bipartite(const Adj& a);
/// No edge whose deletion raises the component count.
bool bridgeless(const Adj& a);
/// Exhaustive 3^(|E|-1) enumeration (first edge pinned to colour 0). |E| <= 18.
bool three_edge_colorable_exhaustive(const Adj& a);
/// Cubic graphs only: 3-edge-colourable iff some perfect matching leaves a
/// 2-factor made of even cycles. Enumerates all perfect matchings.
bool cubic_three_edge_colorable_by_matchings(const Adj& a);

/// Every permutation. n <= 9.
std::optional<std::vector<std::size_t>> isomorphism_exhaustive(const Adj& a, const Adj& b);
/// map0[v] is the 0-based image of 0-based v.
bool is_isomorphism(const Adj& a, const Adj& b, const std::vector<std::size_t>& map0);

/// Held-Karp bitmask DP. n <= 22.
bool hamiltonian_cycle_dp(const Adj& a);
bool hamiltonian_path_dp(const Adj& a, std::size_t u0, std::size_t v0);
/// Every permutation with vertex 0 first. n <= 10.
bool hamiltonian_cycle_permutations(const Adj& a);

/// Smallest vertex set whose removal disconnects; n-1 for complete graphs.
std::size_t vertex_connectivity(const Adj& a);
/// Smallest edge set whose removal disconnects.
std::size_t edge_connectivity(const Adj& a);

/// A^2 has every off-diagonal entry equal to 1.
bool friendship_by_square(const Adj& a);

// --- algebra oracles ---------------------------------------------------------

using graphicable::Rational;
using Vec = std::vector<Rational>;

/// Dense structure matrix; m[j][i] = a_{(j+1)(i+1)}, so column i is e_{i+1}^2.
using Dense = std::vector<std::vector<Rational>>;

Dense dense_structure(const graphicable::EvolutionAlgebra& a);
Dense adjacency_structure(const Adj& a);

/// x*y = sum_i x_i y_i e_i^2.
Vec product(const Dense& m, const Vec& x, const Vec& y);

/// Scans every basis triple (e_i, e_j, e_k) for a nonzero associator.
bool some_basis_triple_nonassociative(const Dense& m);

}  // namespace oracle
