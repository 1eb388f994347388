#pragma once

#include <utility>
#include <vector>

#include "ddg/graph.hpp"

namespace ddg {

// Automorphism of order exactly two that moves only non-adjacent pairs:
// perm(perm(u)) = u for all u, perm != id, and u ~ perm(u) never holds.
struct Involution {
    std::vector<int> perm;
    VertexSet fixed;
    std::vector<std::pair<int, int>> moved;  // (u, perm(u)) with u < perm(u)
};

// All automorphisms of g as image lists, found by backtracking over an
// iterated colour refinement; at most `limit` results when limit >= 0.
// Graphs above 64 vertices are out of scope (TooLarge).
std::vector<std::vector<int>> automorphisms(const Graph& g, long long limit = -1);

// Every involution in Aut(g) whose moved pairs are all non-edges, found by a
// dedicated pairing backtracking (not by filtering automorphisms()).
std::vector<Involution> seidel_automorphisms(const Graph& g);

// Row permutation PA of the adjacency matrix. The input must be a valid
// Involution of g as defined above (NotSeidel otherwise); the result is then
// a simple graph with the same degree at every vertex.
Graph dual_seidel_switch(const Graph& g, const Involution& sigma);

// Exact isomorphism test by refinement-guided backtracking.
bool graph_isomorphic(const Graph& a, const Graph& b);

// Index-doubles g (which must be strongly regular with mu = lambda+1),
// enumerates the double's involutions above, and applies the row switch to
// each; results are deduplicated up to isomorphism. Empty when the double has
// no such involution.
std::vector<Graph> switched_doubles(const Graph& g);

}  // namespace ddg
