#pragma once

#include "covalg/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace covalg {

// K_{n,n}.
BipartiteGraph complete_graph(int n);

// Perfect matching {x_i, y_i}: the graph of an n-element antichain.
BipartiteGraph antichain_graph(int n);

// Graph of the chain p_1 <= ... <= p_n: edges (i, j) for i <= j.
BipartiteGraph chain_graph(int n);

// Graph of a poset given by leq[i-1][j-1] == true iff p_i <= p_j.
BipartiteGraph poset_graph(const std::vector<std::vector<bool>>& leq);

// Every standard graph on n vertex pairs, i.e. every reflexive transitive
// relation on [n], in increasing order of the off-diagonal bit pattern.
// Counts are 1, 4, 29, 355, 6942 for n = 1..5.
std::vector<BipartiteGraph> enumerate_standard_graphs(int n);

// Transitive closure of a random reflexive relation whose off-diagonal pairs
// are present independently with probability `density`.
BipartiteGraph random_standard_graph(int n, double density, std::mt19937_64& rng);

// Uniform random permutation of [n], 1-based.
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace covalg
