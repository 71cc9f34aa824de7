#pragma once

#include "covalg/bigint.hpp"
#include "covalg/graph.hpp"
#include "covalg/lattice.hpp"
#include "covalg/polynomial.hpp"

#include <vector>

namespace covalg {

// Face counts of a simplicial complex of dimension d - 1:
// f[0] = f_{-1} = 1 (the empty face), f[k] = f_{k-1} = number of faces with
// k vertices.
struct FVector {
  std::vector<BigInt> f;

  // Krull dimension of the Stanley-Reisner ring.
  int dimension() const { return static_cast<int>(f.size()) - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

// h[0..d] with sum_i f_{i-1} z^i (1-z)^{d-i} = sum_j h_j z^j.
struct HVector {
  std::vector<BigInt> h;

  IntPolynomial polynomial() const { return IntPolynomial(h); }
  friend bool operator==(const HVector&, const HVector&) = default;
};

// f-vector of the order complex Δ(L): faces are the chains of L. Counts
// chains by length over the comparability DAG without listing them.
FVector order_complex(const CoverLattice& lattice);

// Explicit chains of L (every face of Δ(L), the empty one included), for
// small lattices. Throws LimitExceeded when |L| > max_elements.
std::vector<std::vector<Subset>> order_complex_faces(const CoverLattice& lattice,
                                                     std::size_t max_elements = 16);

HVector h_vector(const FVector& f);

// Hilbert series h(z)/(1-z)^{rank + 1} of the basic cover algebra with
// lattice L. The one-element lattice {∅} (empty index set) gives 1/(1-z).
RationalSeries basic_cover_series(const CoverLattice& lattice);
RationalSeries basic_cover_series(const BipartiteGraph& g);

}  // namespace covalg
