#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace covalg {

// Edge (i, j) stands for {x_i, y_j}; indices are 1-based.
using Edge = std::pair<int, int>;

// Bitmask over indices 1..n; bit k-1 represents index k.
using IndexMask = std::uint64_t;

inline constexpr int kMaxVertexPairs = 64;

// Bipartite graph on {x_1..x_n} ∪ {y_1..y_n}. Edges are kept sorted and
// deduplicated; the x/y orientation is significant.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(int i, int j) const;
  // y-indices adjacent to x_i.
  IndexMask x_neighbors(int i) const { return x_adj_[i - 1]; }
  // x-indices adjacent to y_j.
  IndexMask y_neighbors(int j) const { return y_adj_[j - 1]; }

  bool has_isolated_vertex() const;

  // Conditions (a) (i, i) is an edge for every i, and (b) (i, j), (j, k)
  // edges imply (i, k) for distinct i, j, k.
  bool satisfies_diagonal_condition() const;
  bool satisfies_transitivity_condition() const;
  bool is_standard() const {
    return satisfies_diagonal_condition() && satisfies_transitivity_condition();
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<IndexMask> x_adj_;
  std::vector<IndexMask> y_adj_;
};

// A k-vertex cover candidate: c holds the 2n exponents on x_1..x_n, y_1..y_n.
struct VertexCoverVector {
  std::vector<int> c;
  int k = 0;

  // c_i + c_{n+j} >= k for every edge (i, j).
  bool is_valid_for(const BipartiteGraph& g) const;
};

// Result of standardize(). The new index of x_i is x_relabel[i-1], the new
// index of y_j is y_relabel[j-1]; `matching[i-1]` is the original y-index
// paired with x_i.
struct Standardization {
  BipartiteGraph graph;
  std::vector<int> x_relabel;
  std::vector<int> y_relabel;
  std::vector<int> matching;
  std::size_t matchings_tried = 0;
};

inline constexpr std::size_t kDefaultMatchingBudget = 100000;

struct StandardizeOptions {
  // Maximum number of perfect matchings to try. 0 selects the default: all
  // matchings for n <= 8, otherwise kDefaultMatchingBudget.
  std::size_t matching_budget = 0;
  // Cap on 2n for the brute-force unmixedness verdict attached to
  // NotStandardizable.
  int bruteforce_vertex_limit = 24;
};

// Finds a perfect matching of g that, once aligned to the diagonal, makes the
// edge relation transitive. Throws NoPerfectMatching / NotStandardizable.
Standardization standardize(const BipartiteGraph& g, const StandardizeOptions& opts = {});

// Returns g when it is already standard, otherwise standardize(g).graph.
BipartiteGraph standard_form(const BipartiteGraph& g);

// Removes isolated x- and y-vertices, reindexing each side to 1..m. Throws
// NoPerfectMatching when the two sides end up with different sizes.
BipartiteGraph drop_isolated(const BipartiteGraph& g);

// All perfect matchings found by backtracking, in lexicographic order of the
// matched y-index sequence. Stops after `limit` matchings when limit > 0.
std::vector<std::vector<int>> perfect_matchings(const BipartiteGraph& g, std::size_t limit = 0);

// Maximum matching size by augmenting paths.
int maximum_matching_size(const BipartiteGraph& g);

// True iff every inclusion-minimal vertex cover has exactly n vertices.
// Throws LimitExceeded when 2n > max_vertices.
bool is_unmixed_bruteforce(const BipartiteGraph& g, int max_vertices = 24);

struct InducedSubgraph {
  BipartiteGraph graph;
  // index_map[k-1] is the original index of new index k.
  std::vector<int> index_map;
};

// Subgraph on {x_i, y_i : i in F}, reindexed to 1..|F|. F holds 1-based
// indices; throws std::invalid_argument on an empty or out-of-range F.
InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const int> subset);
InducedSubgraph induced_subgraph(const BipartiteGraph& g, IndexMask subset);

// True iff (i,i), (i,j), (j,i), (j,j) are all edges.
bool has_induced_complete_pair(const BipartiteGraph& g, int i, int j);

// Edge set {(sigma(i), sigma(j))}; sigma[i-1] = sigma(i). Throws
// std::invalid_argument when sigma is not a bijection of [n].
BipartiteGraph apply_permutation(const BipartiteGraph& g, std::span<const int> sigma);

// Isomorphism of the underlying simple graphs on 2n vertices, sides not
// necessarily preserved. Exhaustive; throws LimitExceeded when 2n > max_vertices.
bool are_isomorphic_bruteforce(const BipartiteGraph& a, const BipartiteGraph& b,
                               int max_vertices = 10);

// 1-based index list of a mask, ascending.
std::vector<int> mask_to_indices(IndexMask mask);
IndexMask indices_to_mask(std::span<const int> indices);

}  // namespace covalg
