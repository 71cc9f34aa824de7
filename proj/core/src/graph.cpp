#include "covalg/graph.hpp"

#include "covalg/errors.hpp"
#include "covalg/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace covalg {

namespace {

IndexMask bit(int index) { return IndexMask{1} << (index - 1); }

void check_index(int n, int i, const char* what) {
  if (i < 1 || i > n) {
    throw std::invalid_argument(std::string(what) + " index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(n));
  }
}

// Kuhn's augmenting path step from x-index i.
bool try_augment(const BipartiteGraph& g, int i, std::vector<int>& match_of_y,
                 std::vector<char>& visited) {
  IndexMask nb = g.x_neighbors(i);
  while (nb) {
    int j = std::countr_zero(nb) + 1;
    nb &= nb - 1;
    if (visited[j - 1]) continue;
    visited[j - 1] = 1;
    if (match_of_y[j - 1] == 0 || try_augment(g, match_of_y[j - 1], match_of_y, visited)) {
      match_of_y[j - 1] = i;
      return true;
    }
  }
  return false;
}

BipartiteGraph relabel_y(const BipartiteGraph& g, const std::vector<int>& y_relabel) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [i, j] : g.edges()) edges.emplace_back(i, y_relabel[j - 1]);
  return BipartiteGraph(g.n(), std::move(edges));
}

}  // namespace

BipartiteGraph::BipartiteGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertexPairs) {
    throw std::invalid_argument("vertex pair count must be in 0.." +
                                std::to_string(kMaxVertexPairs));
  }
  for (auto [i, j] : edges_) {
    check_index(n, i, "x");
    check_index(n, j, "y");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  x_adj_.assign(n, 0);
  y_adj_.assign(n, 0);
  for (auto [i, j] : edges_) {
    x_adj_[i - 1] |= bit(j);
    y_adj_[j - 1] |= bit(i);
  }
}

bool BipartiteGraph::has_edge(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) return false;
  return (x_adj_[i - 1] & bit(j)) != 0;
}

bool BipartiteGraph::has_isolated_vertex() const {
  for (int k = 0; k < n_; ++k) {
    if (x_adj_[k] == 0 || y_adj_[k] == 0) return true;
  }
  return false;
}

bool BipartiteGraph::satisfies_diagonal_condition() const {
  for (int i = 1; i <= n_; ++i) {
    if (!has_edge(i, i)) return false;
  }
  return true;
}

bool BipartiteGraph::satisfies_transitivity_condition() const {
  for (auto [i, j] : edges_) {
    if (i == j) continue;
    // Every y_k adjacent to x_j (k != i) must be adjacent to x_i.
    IndexMask need = x_adj_[j - 1] & ~bit(i) & ~bit(j);
    if ((x_adj_[i - 1] & need) != need) return false;
  }
  return true;
}

bool VertexCoverVector::is_valid_for(const BipartiteGraph& g) const {
  if (c.size() != static_cast<std::size_t>(2 * g.n())) {
    throw std::invalid_argument("cover vector must have 2n entries");
  }
  for (auto [i, j] : g.edges()) {
    if (c[i - 1] + c[g.n() + j - 1] < k) return false;
  }
  return true;
}

int maximum_matching_size(const BipartiteGraph& g) {
  std::vector<int> match_of_y(g.n(), 0);
  int size = 0;
  for (int i = 1; i <= g.n(); ++i) {
    std::vector<char> visited(g.n(), 0);
    if (try_augment(g, i, match_of_y, visited)) ++size;
  }
  return size;
}

std::vector<std::vector<int>> perfect_matchings(const BipartiteGraph& g, std::size_t limit) {
  std::vector<std::vector<int>> out;
  const int n = g.n();
  std::vector<int> current(n, 0);
  std::function<bool(int, IndexMask)> extend = [&](int i, IndexMask used) {
    if (i > n) {
      out.push_back(current);
      return limit == 0 || out.size() < limit;
    }
    IndexMask nb = g.x_neighbors(i) & ~used;
    while (nb) {
      int j = std::countr_zero(nb) + 1;
      nb &= nb - 1;
      current[i - 1] = j;
      if (!extend(i + 1, used | bit(j))) return false;
    }
    return true;
  };
  if (n > 0) extend(1, 0);
  return out;
}

Standardization standardize(const BipartiteGraph& g, const StandardizeOptions& opts) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("graph has no vertices");

  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 1);
  if (g.is_standard()) {
    return Standardization{g, identity, identity, identity, 0};
  }

  for (int k = 1; k <= n; ++k) {
    if (g.x_neighbors(k) == 0) {
      throw NoPerfectMatching("vertex x" + std::to_string(k) + " is isolated");
    }
    if (g.y_neighbors(k) == 0) {
      throw NoPerfectMatching("vertex y" + std::to_string(k) + " is isolated");
    }
  }
  if (int m = maximum_matching_size(g); m < n) {
    throw NoPerfectMatching("maximum matching has size " + std::to_string(m) + " < n = " +
                            std::to_string(n));
  }

  std::size_t budget = opts.matching_budget;
  if (budget == 0 && n > 8) budget = kDefaultMatchingBudget;

  std::size_t tried = 0;
  std::optional<Standardization> found;
  std::vector<int> current(n, 0);
  std::function<bool(int, IndexMask)> search = [&](int i, IndexMask used) {
    if (i > n) {
      ++tried;
      std::vector<int> y_relabel(n, 0);
      for (int k = 1; k <= n; ++k) y_relabel[current[k - 1] - 1] = k;
      BipartiteGraph candidate = relabel_y(g, y_relabel);
      if (candidate.satisfies_transitivity_condition()) {
        found = Standardization{std::move(candidate), identity, std::move(y_relabel), current,
                                tried};
        return false;
      }
      return budget == 0 || tried < budget;
    }
    IndexMask nb = g.x_neighbors(i) & ~used;
    while (nb) {
      int j = std::countr_zero(nb) + 1;
      nb &= nb - 1;
      current[i - 1] = j;
      if (!search(i + 1, used | bit(j))) return false;
    }
    return true;
  };
  search(1, 0);
  if (found) return std::move(*found);

  std::optional<bool> verdict;
  if (2 * n <= opts.bruteforce_vertex_limit) verdict = is_unmixed_bruteforce(g, 2 * n);
  std::string what = "no perfect matching among " + std::to_string(tried) +
                     " tried satisfies the transitivity condition";
  if (verdict) what += *verdict ? " (brute force says unmixed)" : " (brute force says mixed)";
  throw NotStandardizable(what, verdict);
}

BipartiteGraph standard_form(const BipartiteGraph& g) {
  if (g.n() >= 1 && g.is_standard()) return g;
  return standardize(g).graph;
}

BipartiteGraph drop_isolated(const BipartiteGraph& g) {
  std::vector<int> x_new(g.n(), 0), y_new(g.n(), 0);
  int nx = 0, ny = 0;
  for (int k = 1; k <= g.n(); ++k) {
    if (g.x_neighbors(k) != 0) x_new[k - 1] = ++nx;
    if (g.y_neighbors(k) != 0) y_new[k - 1] = ++ny;
  }
  if (nx != ny) {
    throw NoPerfectMatching("after dropping isolated vertices the sides have sizes " +
                            std::to_string(nx) + " and " + std::to_string(ny));
  }
  std::vector<Edge> edges;
  for (auto [i, j] : g.edges()) edges.emplace_back(x_new[i - 1], y_new[j - 1]);
  return BipartiteGraph(nx, std::move(edges));
}

bool is_unmixed_bruteforce(const BipartiteGraph& g, int max_vertices) {
  auto covers = minimal_covers_bruteforce(g, max_vertices);
  if (covers.empty()) return false;
  return std::all_of(covers.begin(), covers.end(),
                     [&](const VertexCover& c) { return c.size() == g.n(); });
}

InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const int> subset) {
  if (subset.empty()) throw std::invalid_argument("induced subgraph needs a nonempty index set");
  IndexMask mask = 0;
  for (int i : subset) {
    check_index(g.n(), i, "subset");
    mask |= bit(i);
  }
  return induced_subgraph(g, mask);
}

InducedSubgraph induced_subgraph(const BipartiteGraph& g, IndexMask subset) {
  if (subset == 0) throw std::invalid_argument("induced subgraph needs a nonempty index set");
  if (g.n() < kMaxVertexPairs && (subset >> g.n()) != 0) {
    throw std::invalid_argument("subset has indices above n");
  }
  std::vector<int> index_map = mask_to_indices(subset);
  std::vector<int> new_index(g.n() + 1, 0);
  for (std::size_t k = 0; k < index_map.size(); ++k) new_index[index_map[k]] = int(k) + 1;
  std::vector<Edge> edges;
  for (auto [i, j] : g.edges()) {
    if ((subset & bit(i)) && (subset & bit(j))) edges.emplace_back(new_index[i], new_index[j]);
  }
  return {BipartiteGraph(int(index_map.size()), std::move(edges)), std::move(index_map)};
}

bool has_induced_complete_pair(const BipartiteGraph& g, int i, int j) {
  return g.has_edge(i, i) && g.has_edge(i, j) && g.has_edge(j, i) && g.has_edge(j, j);
}

BipartiteGraph apply_permutation(const BipartiteGraph& g, std::span<const int> sigma) {
  const int n = g.n();
  if (sigma.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("permutation has wrong length");
  }
  IndexMask seen = 0;
  for (int v : sigma) {
    if (v < 1 || v > n || (seen & bit(v))) throw std::invalid_argument("not a bijection of [n]");
    seen |= bit(v);
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [i, j] : g.edges()) edges.emplace_back(sigma[i - 1], sigma[j - 1]);
  return BipartiteGraph(n, std::move(edges));
}

bool are_isomorphic_bruteforce(const BipartiteGraph& a, const BipartiteGraph& b,
                               int max_vertices) {
  if (a.n() != b.n()) return false;
  const int v = 2 * a.n();
  if (v > max_vertices) {
    throw LimitExceeded("isomorphism search limited to " + std::to_string(max_vertices) +
                        " vertices");
  }
  if (a.edge_count() != b.edge_count()) return false;

  // Vertices 0..n-1 are x's, n..2n-1 are y's.
  auto adjacency = [v](const BipartiteGraph& g) {
    std::vector<std::vector<char>> adj(v, std::vector<char>(v, 0));
    for (auto [i, j] : g.edges()) {
      adj[i - 1][g.n() + j - 1] = 1;
      adj[g.n() + j - 1][i - 1] = 1;
    }
    return adj;
  };
  auto adj_a = adjacency(a);
  auto adj_b = adjacency(b);
  auto degrees = [v](const std::vector<std::vector<char>>& adj) {
    std::vector<int> d(v, 0);
    for (int s = 0; s < v; ++s) d[s] = std::accumulate(adj[s].begin(), adj[s].end(), 0);
    return d;
  };
  auto deg_a = degrees(adj_a);
  auto deg_b = degrees(adj_b);
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<int> image(v, -1);
  std::vector<char> used(v, 0);
  std::function<bool(int)> assign = [&](int s) {
    if (s == v) return true;
    for (int t = 0; t < v; ++t) {
      if (used[t] || deg_a[s] != deg_b[t]) continue;
      bool ok = true;
      for (int r = 0; r < s && ok; ++r) ok = adj_a[s][r] == adj_b[t][image[r]];
      if (!ok) continue;
      image[s] = t;
      used[t] = 1;
      if (assign(s + 1)) return true;
      used[t] = 0;
    }
    return false;
  };
  return assign(0);
}

std::vector<int> mask_to_indices(IndexMask mask) {
  std::vector<int> out;
  out.reserve(std::popcount(mask));
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

IndexMask indices_to_mask(std::span<const int> indices) {
  IndexMask m = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxVertexPairs) throw std::invalid_argument("index out of range");
    m |= bit(i);
  }
  return m;
}

}  // namespace covalg
