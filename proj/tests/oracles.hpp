#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library beyond the graph accessors.

#include "covalg/bigint.hpp"
#include "covalg/graph.hpp"
#include "covalg/toric.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using covalg::BigInt;

struct Cover {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  bool operator==(const Cover&) const = default;
  auto operator<=>(const Cover&) const = default;
};

// Every subset of the 2n vertices is tested; minimality by single deletions.
std::vector<Cover> minimal_covers(const covalg::BipartiteGraph& g);

bool is_unmixed(const covalg::BipartiteGraph& g);

// {p_k : x_k in C} over the minimal covers, sorted by (size, index list).
std::vector<std::uint64_t> cover_lattice(const covalg::BipartiteGraph& g);

// Face counts of the order complex by testing every subset of elements.
// Entry 0 counts the empty face.
std::vector<BigInt> f_vector(const std::vector<std::uint64_t>& elements);

// h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1}, d = f.size() - 1.
std::vector<BigInt> h_from_f(const std::vector<BigInt>& f);

// First `terms` coefficients of numerator / (1 - z)^power by repeated prefix sums.
std::vector<BigInt> expand(const std::vector<BigInt>& numerator, int power, int terms);

// n! * sum_{l=0}^n 1/l! evaluated with factorials.
BigInt multiplicity_upper(int n);

// Degree-d monomials in num_vars variables divisible by none of gens.
std::uint64_t standard_monomials(std::size_t num_vars, const std::vector<covalg::Monomial>& gens,
                                 int degree);

// Number of reflexive transitive relations on n points (1, 4, 29, 355, 6942).
std::uint64_t preorder_count(int n);

}  // namespace oracle
