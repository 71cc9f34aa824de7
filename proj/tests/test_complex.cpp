#include "covalg/complex.hpp"
#include "covalg/corpus.hpp"
#include "covalg/lattice.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace covalg;

namespace {

BipartiteGraph g3() { return BipartiteGraph(3, {{1, 1}, {2, 2}, {3, 3}, {2, 3}, {3, 2}}); }

std::vector<BigInt> v(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(OrderComplex, Examples) {
  EXPECT_EQ(order_complex(build_lattice(complete_graph(4))).f, v({1, 2, 1}));
  EXPECT_EQ(order_complex(build_lattice(g3())).f, v({1, 4, 5, 2}));
  EXPECT_EQ(order_complex(CoverLattice(0, {0})).f, v({1, 1}));
  EXPECT_EQ(order_complex_faces(build_lattice(g3())).size(), 12u);
}

TEST(OrderComplex, MatchesSubsetOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_standard_graphs(n)) {
      CoverLattice l = build_lattice(g);
      std::vector<Subset> e(l.elements().begin(), l.elements().end());
      ASSERT_EQ(order_complex(l).f, oracle::f_vector(e));
    }
  }
}

TEST(HVector, Examples) {
  EXPECT_EQ(h_vector(FVector{v({1, 2, 1})}).h, v({1, 0, 0}));
  EXPECT_EQ(h_vector(FVector{v({1, 4, 5, 2})}).h, v({1, 1, 0, 0}));
  EXPECT_EQ(h_vector(FVector{v({1, 1})}).h, v({1, 0}));
}

TEST(HVector, MatchesClosedForm) {
  for (const auto& g : enumerate_standard_graphs(4)) {
    FVector f = order_complex(build_lattice(g));
    ASSERT_EQ(h_vector(f).h, oracle::h_from_f(f.f));
  }
}

TEST(BasicCoverSeries, Examples) {
  EXPECT_EQ(basic_cover_series(CoverLattice(0, {0})), RationalSeries(IntPolynomial{1}, 1));
  EXPECT_EQ(basic_cover_series(g3()), RationalSeries(IntPolynomial{1, 1}, 3));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(basic_cover_series(complete_graph(n)), RationalSeries(IntPolynomial{1}, 2));
  }
}

// h^F has h_r = h_{r+1} = 0 for every F, r the rank of L_{G_F}.
TEST(BasicCoverSeries, TopTwoEntriesVanish) {
  for (const auto& g : enumerate_standard_graphs(4)) {
    for (IndexMask f = 1; f < 16; ++f) {
      CoverLattice l = build_lattice(g, f);
      HVector h = h_vector(order_complex(l));
      const int r = rank(l);
      ASSERT_EQ(static_cast<int>(h.h.size()), r + 2);
      ASSERT_EQ(h.h[r], 0);
      ASSERT_EQ(h.h[r + 1], 0);
    }
  }
}
