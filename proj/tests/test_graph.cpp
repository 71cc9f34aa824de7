#include "covalg/corpus.hpp"
#include "covalg/errors.hpp"
#include "covalg/graph.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace covalg;

namespace {

BipartiteGraph g3() { return BipartiteGraph(3, {{1, 1}, {2, 2}, {3, 3}, {2, 3}, {3, 2}}); }

}  // namespace

TEST(Graph, DedupsAndSortsEdges) {
  BipartiteGraph g(2, {{2, 2}, {1, 1}, {2, 2}, {1, 2}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 1}, {1, 2}, {2, 2}}));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(2, 1));
  EXPECT_THROW(BipartiteGraph(2, {{1, 3}}), std::invalid_argument);
}

TEST(Graph, StandardConditions) {
  EXPECT_TRUE(g3().is_standard());
  EXPECT_TRUE(chain_graph(4).is_standard());
  // (1,2), (2,3) without (1,3).
  BipartiteGraph broken(3, {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}});
  EXPECT_TRUE(broken.satisfies_diagonal_condition());
  EXPECT_FALSE(broken.satisfies_transitivity_condition());
  EXPECT_FALSE(BipartiteGraph(2, {{1, 1}, {1, 2}}).satisfies_diagonal_condition());
}

TEST(Standardize, StandardGraphIsFixedPoint) {
  Standardization st = standardize(g3());
  EXPECT_EQ(st.graph, g3());
  EXPECT_EQ(st.x_relabel, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(st.y_relabel, (std::vector<int>{1, 2, 3}));
}

TEST(Standardize, CrossedMatchingIsAligned) {
  Standardization st = standardize(BipartiteGraph(2, {{1, 2}, {2, 1}}));
  EXPECT_TRUE(st.graph.is_standard());
  EXPECT_EQ(st.graph, antichain_graph(2));
  EXPECT_EQ(st.matching, (std::vector<int>{2, 1}));
}

TEST(Standardize, PathHasNoPerfectMatching) {
  BipartiteGraph path(2, {{1, 1}, {2, 1}});
  EXPECT_THROW(standardize(path), NoPerfectMatching);
  // Same shape, no isolated vertex, still no saturating matching.
  BipartiteGraph star(2, {{1, 1}, {2, 1}, {1, 2}});
  EXPECT_NO_THROW(standardize(star));
  BipartiteGraph p4(3, {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {1, 3}});
  EXPECT_THROW(standardize(p4), NoPerfectMatching);
}

TEST(Standardize, MixedGraphIsRejectedWithVerdict) {
  // Path x1-y1-x2-y2-x3-y3: perfect matching exists, but the graph is mixed.
  BipartiteGraph p6(3, {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}});
  ASSERT_FALSE(oracle::is_unmixed(p6));
  try {
    standardize(p6);
    FAIL() << "expected NotStandardizable";
  } catch (const NotStandardizable& e) {
    ASSERT_TRUE(e.bruteforce_unmixed().has_value());
    EXPECT_FALSE(*e.bruteforce_unmixed());
  }
}

TEST(Standardize, RandomRelabelingsRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    BipartiteGraph g = random_standard_graph(5, 0.3, rng);
    std::vector<int> px = random_permutation(5, rng), py = random_permutation(5, rng);
    std::vector<Edge> scrambled;
    for (auto [i, j] : g.edges()) scrambled.emplace_back(px[i - 1], py[j - 1]);
    BipartiteGraph h(5, scrambled);
    Standardization st = standardize(h);
    EXPECT_TRUE(st.graph.is_standard());
    EXPECT_EQ(st.graph.edge_count(), g.edge_count());
  }
}

TEST(Unmixed, BruteforceExamples) {
  EXPECT_TRUE(is_unmixed_bruteforce(complete_graph(3)));
  EXPECT_TRUE(is_unmixed_bruteforce(g3()));
  // C_4 on x1,x2,y1,y2 plus the pendant edge x1-y3; x3 is an isolated dummy.
  BipartiteGraph pendant(3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}});
  EXPECT_FALSE(oracle::is_unmixed(pendant));
  EXPECT_FALSE(is_unmixed_bruteforce(pendant));
}

// Both verdicts agree on every edge set with n <= 3 and on every n = 4 edge
// set that has a perfect matching.
TEST(Unmixed, StandardizeAgreesWithBruteforce) {
  for (int n = 1; n <= 4; ++n) {
    const int bits = n * n;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
      std::vector<Edge> edges;
      for (int b = 0; b < bits; ++b) {
        if (pattern >> b & 1) edges.emplace_back(b / n + 1, b % n + 1);
      }
      BipartiteGraph g(n, edges);
      if (g.has_isolated_vertex()) continue;
      bool accepted = true;
      try {
        standardize(g);
      } catch (const StandardizationError&) {
        accepted = false;
      }
      ASSERT_EQ(accepted, is_unmixed_bruteforce(g)) << "pattern " << pattern << " n " << n;
    }
  }
}

TEST(Corpus, CountsMatchPreorders) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(enumerate_standard_graphs(n).size(), oracle::preorder_count(n));
  }
  EXPECT_EQ(enumerate_standard_graphs(4).size(), 355u);
  for (const auto& g : enumerate_standard_graphs(4)) ASSERT_TRUE(g.is_standard());
}

TEST(InducedSubgraph, Examples) {
  BipartiteGraph g = g3();
  std::vector<int> f23{2, 3}, f1{1}, all{1, 2, 3};
  EXPECT_EQ(induced_subgraph(g, f23).graph, complete_graph(2));
  EXPECT_EQ(induced_subgraph(g, f23).index_map, (std::vector<int>{2, 3}));
  EXPECT_EQ(induced_subgraph(g, f1).graph, complete_graph(1));
  EXPECT_EQ(induced_subgraph(g, all).graph, g);
  EXPECT_THROW(induced_subgraph(g, IndexMask{0}), std::invalid_argument);
}

TEST(InducedSubgraph, PreservesStandardConditions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    BipartiteGraph g = random_standard_graph(6, 0.35, rng);
    for (IndexMask f = 1; f < (IndexMask{1} << 6); ++f) {
      ASSERT_TRUE(induced_subgraph(g, f).graph.is_standard());
    }
  }
}

TEST(CompletePair, Examples) {
  EXPECT_TRUE(has_induced_complete_pair(g3(), 2, 3));
  EXPECT_FALSE(has_induced_complete_pair(g3(), 1, 2));
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i != j) EXPECT_TRUE(has_induced_complete_pair(complete_graph(4), i, j));
    }
  }
}

TEST(Permutation, Examples) {
  std::vector<int> id{1, 2, 3}, cycle{2, 3, 1};
  EXPECT_EQ(apply_permutation(g3(), id), g3());
  EXPECT_EQ(apply_permutation(g3(), cycle),
            BipartiteGraph(3, {{2, 2}, {3, 3}, {1, 1}, {3, 1}, {1, 3}}));
  EXPECT_EQ(apply_permutation(complete_graph(3), cycle), complete_graph(3));
  std::vector<int> bad{1, 1, 2};
  EXPECT_THROW(apply_permutation(g3(), bad), std::invalid_argument);
}

TEST(Isomorphism, G3AndChainDiffer) {
  EXPECT_FALSE(are_isomorphic_bruteforce(g3(), chain_graph(3)));
  std::vector<int> cycle{2, 3, 1};
  EXPECT_TRUE(are_isomorphic_bruteforce(g3(), apply_permutation(g3(), cycle)));
}

TEST(VertexCoverVector, KCoverCondition) {
  BipartiteGraph g = complete_graph(2);
  EXPECT_TRUE((VertexCoverVector{{2, 2, 0, 0}, 2}).is_valid_for(g));
  EXPECT_TRUE((VertexCoverVector{{1, 1, 1, 1}, 2}).is_valid_for(g));
  EXPECT_FALSE((VertexCoverVector{{1, 0, 1, 1}, 2}).is_valid_for(g));
}

TEST(DropIsolated, ReindexesEachSide) {
  BipartiteGraph g(3, {{1, 1}, {3, 3}});
  EXPECT_EQ(drop_isolated(g), antichain_graph(2));
  EXPECT_THROW(drop_isolated(BipartiteGraph(2, {{1, 1}, {2, 1}})), NoPerfectMatching);
}

TEST(Unmixed, EveryStandardGraphIsUnmixedAtN5) {
  for (const auto& g : enumerate_standard_graphs(5)) ASSERT_TRUE(is_unmixed_bruteforce(g));
}

// Random n = 5 edge sets: accepting standardize and brute-force unmixedness coincide.
TEST(Unmixed, StandardizeAgreesWithBruteforceAtN5) {
  std::mt19937_64 rng(23);
  std::bernoulli_distribution coin(0.35);
  int accepted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Edge> edges;
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        if (i == j || coin(rng)) edges.emplace_back(i, j);
      }
    }
    // Scramble the y-side so the diagonal matching is hidden.
    std::vector<int> py = random_permutation(5, rng);
    for (auto& [i, j] : edges) j = py[j - 1];
    BipartiteGraph g(5, edges);
    bool ok = true;
    try {
      standardize(g);
    } catch (const StandardizationError&) {
      ok = false;
    }
    accepted += ok;
    ASSERT_EQ(ok, is_unmixed_bruteforce(g)) << trial;
  }
  EXPECT_GT(accepted, 0);
}
