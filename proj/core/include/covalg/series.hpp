#pragma once

#include "covalg/bigint.hpp"
#include "covalg/graph.hpp"
#include "covalg/polynomial.hpp"

#include <utility>
#include <vector>

namespace covalg {

// Per-subset data for the basic cover algebras of the induced subgraphs G_F.
struct SubsetTerm {
  IndexMask subset = 0;
  int size = 0;            // |F|
  int rank = 0;            // rank of L_{G_F}
  std::size_t lattice_size = 0;
  IntPolynomial h;         // numerator of the series of the basic cover algebra
  BigInt maximal_chains;   // last entry of the f-vector of Δ(L_{G_F})

  bool cohen_macaulay() const { return rank == size; }
};

// One lattice per F ⊆ [n], computed once and shared by every formula below.
// terms[F] is indexed by the mask of F, so terms[0] is the F = ∅ convention.
struct SubsetSweep {
  int n = 0;
  std::vector<SubsetTerm> terms;
};

struct SweepOptions {
  // Worker threads; 0 means std::thread::hardware_concurrency(). Results do
  // not depend on this value.
  unsigned threads = 1;
  // Largest n accepted.
  int max_n = 16;
};

// Requires g standard.
SubsetSweep sweep_subsets(const BipartiteGraph& g, const SweepOptions& opts = {});

// H(z) = (1-z)^{-n} sum_F H_F(z) (z/(1-z))^{n-|F|}, by series arithmetic.
RationalSeries series_by_subset_sum(const SubsetSweep& sweep);

// h(z) = sum_F h_F(z) (1-z)^{|F|-r_F} z^{n-|F|}, by polynomial arithmetic.
IntPolynomial h_by_subset_sum(const SubsetSweep& sweep);

// sum over Cohen-Macaulay F (F = ∅ included) of h_F(1).
BigInt multiplicity_by_cm_sum(const SubsetSweep& sweep);

// sum over Cohen-Macaulay F of the maximal chain count of L_{G_F}.
BigInt multiplicity_by_chain_count(const SubsetSweep& sweep);

// Hilbert series of A(G). Non-standard input is standardized first. The
// result has denominator power 2n + 1.
RationalSeries vertex_cover_series(const BipartiteGraph& g, const SweepOptions& opts = {});

// h-polynomial of A(G); cross-checked against the numerator of
// vertex_cover_series. Throws InconsistencyError on disagreement.
IntPolynomial h_polynomial(const BipartiteGraph& g, const SweepOptions& opts = {});

// e(A(G)) from the Cohen-Macaulay subset sum, cross-checked against h(1) and
// the maximal chain counts. Throws InconsistencyError on disagreement.
BigInt multiplicity(const BipartiteGraph& g, const SweepOptions& opts = {});

// (n + 1, n! sum_{l=0}^{n} 1/l!).
std::pair<BigInt, BigInt> multiplicity_bounds(int n);

// deg h <= n, h_n = 1, h_{n+1} = 0 and h_i = h_{n-i} for 0 <= i <= n.
bool check_gorenstein_symmetry(const IntPolynomial& h, int n);

// deg(numerator) - denominator power.
int a_invariant(const RationalSeries& series);

// (1 + z + ... + z^n)/(1-z)^{2n+1}.
RationalSeries complete_graph_series(int n);

// vertex_cover_series(g) == complete_graph_series(n), cross-checked against
// |L_G| == 2. Throws InconsistencyError on disagreement.
bool is_knn_by_series(const BipartiteGraph& g, const SweepOptions& opts = {});

}  // namespace covalg
