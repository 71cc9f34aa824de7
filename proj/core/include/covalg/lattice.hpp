#pragma once

#include "covalg/bigint.hpp"
#include "covalg/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace covalg {

// Subset of {p_1..p_n}; bit k-1 represents p_k.
using Subset = IndexMask;

// Vertex set split by side; bit k-1 of `x` is x_k, of `y` is y_k.
struct VertexCover {
  IndexMask x = 0;
  IndexMask y = 0;

  int size() const;
  friend bool operator==(const VertexCover&, const VertexCover&) = default;
  friend auto operator<=>(const VertexCover&, const VertexCover&) = default;
};

// Canonical element order: by cardinality, then lexicographically on the
// ascending index lists.
bool canonical_less(Subset a, Subset b);

// A family of subsets of {p_1..p_n} ordered by inclusion. Elements are stored
// in canonical order, so index 0 is the bottom and the last index the top for
// every valid cover lattice.
class CoverLattice {
 public:
  CoverLattice() = default;
  // Sorts and deduplicates. Throws std::invalid_argument if an element has
  // bits above n.
  CoverLattice(int n, std::vector<Subset> elements);

  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  std::span<const Subset> elements() const { return elements_; }
  Subset element(std::size_t idx) const { return elements_[idx]; }
  Subset full_set() const;

  bool contains(Subset s) const { return index_of(s) >= 0; }
  // Position in canonical order or -1.
  int index_of(Subset s) const;

  // ∅ and the full set are present and the family is closed under ∪, ∩.
  bool is_sublattice() const;

  friend bool operator==(const CoverLattice& a, const CoverLattice& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  int n_ = 0;
  std::vector<Subset> elements_;
  // Dense mask -> index table for n <= kDenseIndexBits, otherwise empty.
  std::vector<std::int32_t> dense_index_;
};

inline constexpr int kDenseIndexBits = 20;
inline constexpr int kMaxLatticeN = 24;

// All inclusion-minimal vertex covers, sorted. Throws LimitExceeded when
// 2n > max_vertices.
std::vector<VertexCover> minimal_covers_bruteforce(const BipartiteGraph& g,
                                                   int max_vertices = 24);

// Down-sets of the edge relation: alpha with (i,j) an edge and j in alpha
// implying i in alpha. Requires g standard. Throws LimitExceeded above
// kMaxLatticeN.
CoverLattice build_lattice(const BipartiteGraph& g);

// Lattice of the induced subgraph G_F, computed directly on g with F given as
// a mask and reindexed to 1..|F|. The empty F yields the one-element lattice
// {∅} with n = 0.
CoverLattice build_lattice(const BipartiteGraph& g, IndexMask subset);

// Image of minimal covers under C -> {p_k : x_k in C}.
CoverLattice lattice_from_covers(int n, std::span<const VertexCover> covers);

// Elements strictly above alpha with nothing of the lattice in between.
// Throws std::invalid_argument if alpha is not an element.
std::vector<Subset> upper_neighbors(const CoverLattice& lattice, Subset alpha);

// Elements strictly below beta with nothing of the lattice in between.
std::vector<Subset> lower_neighbors(const CoverLattice& lattice, Subset beta);

// All covering pairs (alpha, beta), beta an upper neighbour of alpha, ordered
// by the canonical index of alpha then beta.
std::vector<std::pair<Subset, Subset>> covering_pairs(const CoverLattice& lattice);

// Unordered incomparable pairs {alpha, beta} with index(alpha) < index(beta).
std::vector<std::pair<Subset, Subset>> incomparable_pairs(const CoverLattice& lattice);

struct HasseSummary {
  int shortest_maximal_chain = 0;
  int longest_maximal_chain = 0;
  BigInt maximal_chains;
  std::size_t covering_pairs = 0;
};

// One pass over the lower covers of every element. Throws NonGradedLattice
// when the family has no unique bottom and top.
HasseSummary hasse_summary(const CoverLattice& lattice);

// Common length of all maximal chains. Throws NonGradedLattice when lengths
// differ or the family has no unique bottom/top.
int rank(const CoverLattice& lattice);

// Every maximal chain bottom -> top as a list of elements.
std::vector<std::vector<Subset>> maximal_chains(const CoverLattice& lattice);
BigInt count_maximal_chains(const CoverLattice& lattice);

// rank(L_G) == n.
bool is_cohen_macaulay(const BipartiteGraph& g);

struct CmReduction {
  // Sorted 1-based indices.
  std::vector<int> subset;
  BipartiteGraph reduced;
};

// Lexicographically smallest maximal F with no induced K_{i,j} inside F.
CmReduction cm_reduce(const BipartiteGraph& g);

// Map between families of subsets. image[k] is the image of domain[k].
struct LatticeMap {
  std::vector<Subset> domain;
  std::vector<Subset> image;
  std::vector<Subset> codomain;
  bool is_isomorphism = false;
};

// True iff map.image is a bijection onto map.codomain that preserves and
// reflects inclusion.
bool check_poset_isomorphism(const LatticeMap& map);

// nu: L_{G_F} -> L_G, alpha' -> alpha' ∪ {p_j : j not in F, p_i in alpha',
// K_{i,j} induced in G}. Domain elements are written in the original
// indices. Throws NotIsomorphism if the check fails.
LatticeMap lattice_embedding(const BipartiteGraph& g, std::span<const int> subset);

// beta = alpha ∪ delta_alpha where delta_alpha is the largest gamma within
// {p_i : i in F} with alpha ∪ gamma in L_G. alpha must be an element of
// L_{G_{[n] minus F}} written in original indices.
Subset delta_completion(const BipartiteGraph& g, IndexMask subset, Subset alpha);

// Elements beta of L_G such that no nonempty A within F makes
// beta ∪ {p_i : i in A} an upper neighbour of beta.
std::vector<Subset> completion_targets(const BipartiteGraph& g, IndexMask subset);

// phi: L_{G_{[n] minus F}} -> completion_targets(g, F), checked.
LatticeMap completion_map(const BipartiteGraph& g, IndexMask subset);

// For an induced K_{i,j} (i < j), C -> C ∪ {x_j} if x_i in C else C ∪ {y_j}
// maps the minimal covers of G minus {x_j, y_j} bijectively onto those of G.
// Returns whether that holds, by exhaustive enumeration on both sides.
bool verify_cover_bijection(const BipartiteGraph& g, int i, int j, int max_vertices = 24);

}  // namespace covalg
