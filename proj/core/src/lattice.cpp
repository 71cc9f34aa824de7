#include "covalg/lattice.hpp"

#include "covalg/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

namespace covalg {

namespace {

Subset low_mask(int n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

// Scatter the low |indices| bits of `compact` onto the 1-based `indices`.
Subset expand(Subset compact, const std::vector<int>& indices) {
  Subset out = 0;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (compact >> k & 1) out |= Subset{1} << (indices[k] - 1);
  }
  return out;
}

// Inverse of expand on subsets of the index set.
Subset compress(Subset wide, const std::vector<int>& indices) {
  Subset out = 0;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (wide >> (indices[k] - 1) & 1) out |= Subset{1} << k;
  }
  return out;
}

// p_j in alpha implies p_i in alpha for every edge (i, j) inside `within`.
bool is_down_set(const BipartiteGraph& g, Subset alpha, Subset within) {
  Subset rest = alpha;
  while (rest) {
    int j = std::countr_zero(rest) + 1;
    rest &= rest - 1;
    if ((g.y_neighbors(j) & within & ~alpha) != 0) return false;
  }
  return true;
}

void require_standard(const BipartiteGraph& g) {
  if (!g.is_standard()) {
    throw std::invalid_argument("graph is not in standard form; call standardize() first");
  }
}

CoverLattice filter_down_sets(const std::vector<Subset>& below, int m) {
  if (m > kMaxLatticeN) {
    throw LimitExceeded("lattice enumeration limited to n <= " + std::to_string(kMaxLatticeN));
  }
  std::vector<Subset> elements;
  const Subset total = Subset{1} << m;
  for (Subset alpha = 0; alpha < total; ++alpha) {
    bool ok = true;
    Subset rest = alpha;
    while (rest) {
      int k = std::countr_zero(rest);
      rest &= rest - 1;
      if ((below[k] & ~alpha) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) elements.push_back(alpha);
  }
  return CoverLattice(m, std::move(elements));
}

}  // namespace

int VertexCover::size() const { return std::popcount(x) + std::popcount(y); }

bool canonical_less(Subset a, Subset b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  Subset lowest = (a ^ b) & ~((a ^ b) - 1);
  return (a & lowest) != 0;
}

CoverLattice::CoverLattice(int n, std::vector<Subset> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n < 0 || n > kMaxVertexPairs) throw std::invalid_argument("lattice ground set too large");
  for (Subset s : elements_) {
    if ((s & ~low_mask(n)) != 0) throw std::invalid_argument("lattice element outside {p_1..p_n}");
  }
  std::sort(elements_.begin(), elements_.end(), canonical_less);
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (n <= kDenseIndexBits) {
    dense_index_.assign(std::size_t{1} << n, -1);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      dense_index_[elements_[k]] = static_cast<std::int32_t>(k);
    }
  }
}

Subset CoverLattice::full_set() const { return low_mask(n_); }

int CoverLattice::index_of(Subset s) const {
  if ((s & ~low_mask(n_)) != 0) return -1;
  if (!dense_index_.empty()) return dense_index_[s];
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s, canonical_less);
  if (it == elements_.end() || *it != s) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool CoverLattice::is_sublattice() const {
  if (!contains(0) || !contains(full_set())) return false;
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    for (std::size_t b = a + 1; b < elements_.size(); ++b) {
      if (!contains(elements_[a] | elements_[b]) || !contains(elements_[a] & elements_[b])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<VertexCover> minimal_covers_bruteforce(const BipartiteGraph& g, int max_vertices) {
  const int n = g.n();
  if (2 * n > max_vertices || n > 30) {
    throw LimitExceeded("minimal cover enumeration limited to " + std::to_string(max_vertices) +
                        " vertices");
  }
  // A minimal cover is determined by its x-part: every y with an excluded
  // x-neighbour must be in, every other y must be out.
  std::vector<VertexCover> out;
  const Subset all = low_mask(n);
  for (Subset x_in = 0; x_in <= all; ++x_in) {
    Subset x_out = all & ~x_in;
    Subset y_in = 0;
    for (Subset rest = x_out; rest; rest &= rest - 1) {
      y_in |= g.x_neighbors(std::countr_zero(rest) + 1);
    }
    bool minimal = true;
    for (Subset rest = x_in; rest && minimal; rest &= rest - 1) {
      int i = std::countr_zero(rest) + 1;
      minimal = (g.x_neighbors(i) & ~y_in) != 0;
    }
    if (minimal) out.push_back({x_in, y_in});
    if (x_in == all) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoverLattice build_lattice(const BipartiteGraph& g) {
  require_standard(g);
  std::vector<Subset> below(g.n());
  for (int j = 1; j <= g.n(); ++j) below[j - 1] = g.y_neighbors(j);
  return filter_down_sets(below, g.n());
}

CoverLattice build_lattice(const BipartiteGraph& g, IndexMask subset) {
  require_standard(g);
  if ((subset & ~low_mask(g.n())) != 0) throw std::invalid_argument("subset has indices above n");
  std::vector<int> idx = mask_to_indices(subset);
  std::vector<Subset> below(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    below[k] = compress(g.y_neighbors(idx[k]) & subset, idx);
  }
  return filter_down_sets(below, static_cast<int>(idx.size()));
}

CoverLattice lattice_from_covers(int n, std::span<const VertexCover> covers) {
  std::vector<Subset> elements;
  elements.reserve(covers.size());
  for (const auto& c : covers) elements.push_back(c.x);
  return CoverLattice(n, std::move(elements));
}

std::vector<Subset> upper_neighbors(const CoverLattice& lattice, Subset alpha) {
  int start = lattice.index_of(alpha);
  if (start < 0) throw std::invalid_argument("element is not in the lattice");
  std::vector<Subset> found;
  for (std::size_t k = start + 1; k < lattice.size(); ++k) {
    Subset beta = lattice.element(k);
    if ((beta & alpha) != alpha || beta == alpha) continue;
    bool minimal = std::none_of(found.begin(), found.end(),
                                [beta](Subset g) { return (g & beta) == g; });
    if (minimal) found.push_back(beta);
  }
  return found;
}

std::vector<Subset> lower_neighbors(const CoverLattice& lattice, Subset beta) {
  int start = lattice.index_of(beta);
  if (start < 0) throw std::invalid_argument("element is not in the lattice");
  // Candidates strictly below beta, largest first.
  std::vector<Subset> below;
  const bool by_submask = lattice.n() <= kDenseIndexBits &&
                          (std::size_t{1} << std::popcount(beta)) < static_cast<std::size_t>(start);
  if (by_submask && beta != 0) {
    for (Subset sub = (beta - 1) & beta;; sub = (sub - 1) & beta) {
      if (lattice.contains(sub)) below.push_back(sub);
      if (sub == 0) break;
    }
    std::sort(below.begin(), below.end(),
              [](Subset a, Subset b) { return std::popcount(a) > std::popcount(b); });
  } else {
    for (int k = start - 1; k >= 0; --k) {
      Subset alpha = lattice.element(k);
      if ((alpha & beta) == alpha && alpha != beta) below.push_back(alpha);
    }
  }
  std::vector<Subset> found;
  for (Subset alpha : below) {
    bool maximal = std::none_of(found.begin(), found.end(),
                                [alpha](Subset g) { return (alpha & g) == alpha; });
    if (maximal) found.push_back(alpha);
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<std::pair<Subset, Subset>> covering_pairs(const CoverLattice& lattice) {
  std::vector<std::pair<Subset, Subset>> out;
  for (Subset alpha : lattice.elements()) {
    for (Subset beta : upper_neighbors(lattice, alpha)) out.emplace_back(alpha, beta);
  }
  return out;
}

std::vector<std::pair<Subset, Subset>> incomparable_pairs(const CoverLattice& lattice) {
  std::vector<std::pair<Subset, Subset>> out;
  auto el = lattice.elements();
  for (std::size_t a = 0; a < el.size(); ++a) {
    for (std::size_t b = a + 1; b < el.size(); ++b) {
      Subset meet = el[a] & el[b];
      if (meet != el[a] && meet != el[b]) out.emplace_back(el[a], el[b]);
    }
  }
  return out;
}

HasseSummary hasse_summary(const CoverLattice& lattice) {
  const std::size_t size = lattice.size();
  if (size == 0) throw NonGradedLattice("empty family");
  Subset bottom = lattice.element(0), top = lattice.element(size - 1);
  for (Subset s : lattice.elements()) {
    if ((bottom & s) != bottom || (s & top) != s) {
      throw NonGradedLattice("family has no unique bottom and top");
    }
  }
  // Canonical order sorts by cardinality first, so it is a topological order
  // of the Hasse diagram.
  HasseSummary out;
  std::vector<int> shortest(size, 0), longest(size, 0);
  std::vector<BigInt> paths(size, 0);
  paths[0] = 1;
  for (std::size_t k = 1; k < size; ++k) {
    auto lower = lower_neighbors(lattice, lattice.element(k));
    out.covering_pairs += lower.size();
    int lo = -1, hi = -1;
    for (Subset a : lower) {
      int idx = lattice.index_of(a);
      lo = lo < 0 ? shortest[idx] + 1 : std::min(lo, shortest[idx] + 1);
      hi = std::max(hi, longest[idx] + 1);
      paths[k] += paths[idx];
    }
    shortest[k] = lo;
    longest[k] = hi;
  }
  out.shortest_maximal_chain = shortest[size - 1];
  out.longest_maximal_chain = longest[size - 1];
  out.maximal_chains = paths[size - 1];
  return out;
}

int rank(const CoverLattice& lattice) {
  HasseSummary s = hasse_summary(lattice);
  if (s.shortest_maximal_chain != s.longest_maximal_chain) {
    throw NonGradedLattice("maximal chains have lengths " +
                           std::to_string(s.shortest_maximal_chain) + " and " +
                           std::to_string(s.longest_maximal_chain));
  }
  return s.longest_maximal_chain;
}

std::vector<std::vector<Subset>> maximal_chains(const CoverLattice& lattice) {
  std::vector<std::vector<Subset>> out;
  if (lattice.size() == 0) return out;
  const Subset top = lattice.element(lattice.size() - 1);
  std::vector<Subset> chain{lattice.element(0)};
  std::function<void()> walk = [&] {
    Subset last = chain.back();
    if (last == top) {
      out.push_back(chain);
      return;
    }
    for (Subset next : upper_neighbors(lattice, last)) {
      chain.push_back(next);
      walk();
      chain.pop_back();
    }
  };
  walk();
  return out;
}

BigInt count_maximal_chains(const CoverLattice& lattice) {
  return hasse_summary(lattice).maximal_chains;
}

bool is_cohen_macaulay(const BipartiteGraph& g) {
  return rank(build_lattice(g)) == g.n();
}

CmReduction cm_reduce(const BipartiteGraph& g) {
  require_standard(g);
  std::vector<int> chosen;
  for (int i = 1; i <= g.n(); ++i) {
    bool clash = std::any_of(chosen.begin(), chosen.end(),
                             [&](int k) { return has_induced_complete_pair(g, k, i); });
    if (!clash) chosen.push_back(i);
  }
  BipartiteGraph reduced = induced_subgraph(g, std::span<const int>(chosen)).graph;
  return {std::move(chosen), std::move(reduced)};
}

bool check_poset_isomorphism(const LatticeMap& map) {
  const std::size_t size = map.domain.size();
  if (map.image.size() != size || map.codomain.size() != size) return false;
  std::set<Subset> target(map.codomain.begin(), map.codomain.end());
  std::set<Subset> hit(map.image.begin(), map.image.end());
  if (hit.size() != size || hit != target) return false;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      bool below = (map.domain[a] & map.domain[b]) == map.domain[a];
      bool image_below = (map.image[a] & map.image[b]) == map.image[a];
      if (below != image_below) return false;
    }
  }
  return true;
}

LatticeMap lattice_embedding(const BipartiteGraph& g, std::span<const int> subset) {
  require_standard(g);
  IndexMask fmask = 0;
  for (int i : subset) {
    if (i < 1 || i > g.n()) throw std::invalid_argument("subset index out of range");
    fmask |= IndexMask{1} << (i - 1);
  }
  if (fmask == 0) throw std::invalid_argument("subset must be nonempty");
  std::vector<int> idx = mask_to_indices(fmask);
  CoverLattice reduced = build_lattice(g, fmask);
  CoverLattice full = build_lattice(g);

  LatticeMap map;
  for (Subset compact : reduced.elements()) {
    Subset alpha = expand(compact, idx);
    Subset extra = 0;
    for (int j = 1; j <= g.n(); ++j) {
      if (fmask >> (j - 1) & 1) continue;
      for (Subset rest = alpha; rest; rest &= rest - 1) {
        if (has_induced_complete_pair(g, std::countr_zero(rest) + 1, j)) {
          extra |= Subset{1} << (j - 1);
          break;
        }
      }
    }
    map.domain.push_back(alpha);
    map.image.push_back(alpha | extra);
  }
  map.codomain.assign(full.elements().begin(), full.elements().end());
  map.is_isomorphism = check_poset_isomorphism(map);
  if (!map.is_isomorphism) {
    throw NotIsomorphism("nu is not a lattice isomorphism for the given subset");
  }
  return map;
}

Subset delta_completion(const BipartiteGraph& g, IndexMask subset, Subset alpha) {
  require_standard(g);
  const Subset all = low_mask(g.n());
  if (subset == 0 || (subset & ~all) != 0 || subset == all) {
    throw std::invalid_argument("completion needs a proper nonempty subset of [n]");
  }
  const Subset complement = all & ~subset;
  if ((alpha & ~complement) != 0 || !is_down_set(g, alpha, complement)) {
    throw std::invalid_argument("alpha is not an element of the complementary lattice");
  }
  Subset delta = 0;
  bool any = false;
  // Union of all gamma within P_n(F) with alpha ∪ gamma in L_G.
  for (Subset gamma = subset;; gamma = (gamma - 1) & subset) {
    if (is_down_set(g, alpha | gamma, all)) {
      delta |= gamma;
      any = true;
    }
    if (gamma == 0) break;
  }
  if (!any) throw InconsistencyError("no completion of alpha lies in L_G");
  return alpha | delta;
}

std::vector<Subset> completion_targets(const BipartiteGraph& g, IndexMask subset) {
  CoverLattice full = build_lattice(g);
  std::vector<Subset> out;
  for (Subset beta : full.elements()) {
    auto upper = upper_neighbors(full, beta);
    bool blocked = false;
    for (Subset a = subset; a != 0 && !blocked; a = (a - 1) & subset) {
      Subset grown = beta | a;
      if (grown == beta) continue;
      blocked = std::find(upper.begin(), upper.end(), grown) != upper.end();
    }
    if (!blocked) out.push_back(beta);
  }
  return out;
}

LatticeMap completion_map(const BipartiteGraph& g, IndexMask subset) {
  const Subset all = low_mask(g.n());
  const Subset complement = all & ~subset;
  std::vector<int> idx = mask_to_indices(complement);
  CoverLattice domain = build_lattice(g, complement);
  LatticeMap map;
  for (Subset compact : domain.elements()) {
    Subset alpha = expand(compact, idx);
    map.domain.push_back(alpha);
    map.image.push_back(delta_completion(g, subset, alpha));
  }
  map.codomain = completion_targets(g, subset);
  map.is_isomorphism = check_poset_isomorphism(map);
  return map;
}

bool verify_cover_bijection(const BipartiteGraph& g, int i, int j, int max_vertices) {
  if (i == j || !has_induced_complete_pair(g, i, j)) {
    throw std::invalid_argument("indices must span an induced K_{i,j}");
  }
  std::vector<int> keep;
  for (int k = 1; k <= g.n(); ++k) {
    if (k != j) keep.push_back(k);
  }
  InducedSubgraph h = induced_subgraph(g, std::span<const int>(keep));
  auto covers_h = minimal_covers_bruteforce(h.graph, max_vertices);
  auto covers_g = minimal_covers_bruteforce(g, max_vertices);

  const IndexMask bit_i = IndexMask{1} << (i - 1);
  const IndexMask bit_j = IndexMask{1} << (j - 1);
  std::set<VertexCover> images;
  for (const auto& c : covers_h) {
    VertexCover lifted{expand(c.x, h.index_map), expand(c.y, h.index_map)};
    if (lifted.x & bit_i) {
      lifted.x |= bit_j;
    } else {
      lifted.y |= bit_j;
    }
    images.insert(lifted);
  }
  if (images.size() != covers_h.size()) return false;
  return images == std::set<VertexCover>(covers_g.begin(), covers_g.end());
}

}  // namespace covalg
