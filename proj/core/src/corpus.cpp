#include "covalg/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace covalg {

namespace {

using Relation = std::vector<std::vector<bool>>;

void close_transitively(Relation& rel) {
  const std::size_t n = rel.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k][j]) rel[i][j] = true;
      }
    }
  }
}

BipartiteGraph relation_graph(const Relation& rel) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(rel.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rel[i][j]) edges.emplace_back(i + 1, j + 1);
    }
  }
  return BipartiteGraph(n, std::move(edges));
}

}  // namespace

BipartiteGraph complete_graph(int n) {
  Relation rel(n, std::vector<bool>(n, true));
  return relation_graph(rel);
}

BipartiteGraph antichain_graph(int n) {
  Relation rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) rel[i][i] = true;
  return relation_graph(rel);
}

BipartiteGraph chain_graph(int n) {
  Relation rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) rel[i][j] = true;
  }
  return relation_graph(rel);
}

BipartiteGraph poset_graph(const std::vector<std::vector<bool>>& leq) {
  for (const auto& row : leq) {
    if (row.size() != leq.size()) throw std::invalid_argument("order relation must be square");
  }
  return relation_graph(leq);
}

std::vector<BipartiteGraph> enumerate_standard_graphs(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= 5");
  std::vector<std::pair<int, int>> off;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) off.emplace_back(i, j);
    }
  }
  std::vector<BipartiteGraph> out;
  const std::uint64_t total = std::uint64_t{1} << off.size();
  for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
    Relation rel(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) rel[i][i] = true;
    for (std::size_t b = 0; b < off.size(); ++b) {
      if (pattern >> b & 1) rel[off[b].first][off[b].second] = true;
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i) {
      for (int j = 0; j < n && transitive; ++j) {
        if (!rel[i][j]) continue;
        for (int k = 0; k < n; ++k) {
          if (rel[j][k] && !rel[i][k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (transitive) out.push_back(relation_graph(rel));
  }
  return out;
}

BipartiteGraph random_standard_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Relation rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rel[i][j] = (i == j) || coin(rng);
  }
  close_transitively(rel);
  return relation_graph(rel);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

}  // namespace covalg
