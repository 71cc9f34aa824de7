#include "covalg/corpus.hpp"
#include "covalg/errors.hpp"
#include "covalg/series.hpp"
#include "covalg/toric.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace covalg;

namespace {

BipartiteGraph g3() { return BipartiteGraph(3, {{1, 1}, {2, 2}, {3, 3}, {2, 3}, {3, 2}}); }

Monomial mono(std::initializer_list<int> exps) {
  return Monomial(std::vector<std::uint16_t>(exps.begin(), exps.end()));
}

IntPolynomial ones(int n) { return IntPolynomial(std::vector<BigInt>(n + 1, 1)); }

}  // namespace

TEST(Order, LexOnXYThenRevlexOnU) {
  MonomialOrder order(1);  // x1, y1, then u-variables
  // x-part decides first.
  EXPECT_TRUE(order.greater(mono({1, 0, 1, 0}), mono({0, 5, 0, 3})));
  EXPECT_TRUE(order.greater(mono({0, 1, 0, 0}), mono({0, 0, 0, 9})));
  // Equal xy-part: higher u-degree wins.
  EXPECT_TRUE(order.greater(mono({0, 0, 1, 1}), mono({0, 0, 0, 1})));
  // Same degree: more of the smallest u-variable is smaller.
  MonomialOrder uo(0);
  EXPECT_TRUE(uo.greater(mono({0, 1, 1, 0}), mono({1, 0, 0, 1})));
  EXPECT_EQ(uo.compare(mono({0, 1}), mono({0, 1})), 0);
}

TEST(GroebnerBasis, CompleteGraph) {
  for (int n = 1; n <= 4; ++n) {
    ToricRing ring(complete_graph(n));
    auto basis = groebner_basis(ring);
    ASSERT_EQ(basis.size(), 1u);
    std::string x, y;
    for (int i = 1; i <= n; ++i) {
      x += "x" + std::to_string(i) + "*";
      y += "y" + std::to_string(i) + "*";
    }
    std::string top = "u{";
    for (int i = 1; i <= n; ++i) top += (i > 1 ? "," : "") + std::to_string(i);
    top += "}";
    EXPECT_EQ(groebner_to_text(ring, basis), x + "u{} - " + y + top + "\n");
    EXPECT_EQ(initial_ideal(basis).size(), 1u);
  }
}

TEST(GroebnerBasis, G3AndChain) {
  ToricRing ring(g3());
  auto basis = groebner_basis(ring);
  EXPECT_EQ(groebner_to_text(ring, basis),
            "x1*u{} - y1*u{1}\n"
            "x2*x3*u{} - y2*y3*u{2,3}\n"
            "x2*x3*u{1} - y2*y3*u{1,2,3}\n"
            "x1*u{2,3} - y1*u{1,2,3}\n"
            "u{1}*u{2,3} - u{}*u{1,2,3}\n");
  auto init = initial_ideal(basis);
  EXPECT_EQ(init.size(), 5u);
  for (const auto& m : init) EXPECT_TRUE(m.is_squarefree());

  ToricRing chain(chain_graph(3));
  auto cb = groebner_basis(chain);
  EXPECT_EQ(cb.size(), 3u);
  for (const auto& b : cb) {
    int x_degree = 0;
    for (int i = 1; i <= 3; ++i) x_degree += b.lead[chain.x_var(i)];
    EXPECT_EQ(x_degree, 1);
  }
}

TEST(Buchberger, Examples) {
  for (int n = 1; n <= 4; ++n) {
    ToricRing ring(complete_graph(n));
    auto rep = buchberger_verify(ring, groebner_basis(ring), MonomialOrder(n));
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.pairs_checked, 0u);
  }
  ToricRing ring(g3());
  auto basis = groebner_basis(ring);
  auto rep = buchberger_verify(ring, basis, MonomialOrder(3));
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.pairs_checked, 10u);
}

TEST(Buchberger, DeletedBinomialIsCaught) {
  ToricRing ring(g3());
  auto basis = groebner_basis(ring);
  basis.pop_back();  // the quadratic binomial
  auto rep = buchberger_verify(ring, basis, MonomialOrder(3));
  EXPECT_FALSE(rep.ok());
  EXPECT_GT(rep.nonzero_remainders, 0u);
}

TEST(Buchberger, SwappedTermsAreReported) {
  ToricRing ring(g3());
  auto basis = groebner_basis(ring);
  std::swap(basis[0].lead, basis[0].trail);
  auto rep = buchberger_verify(ring, basis, MonomialOrder(3));
  EXPECT_FALSE(rep.leads_correct);
  EXPECT_FALSE(rep.ok());
}

TEST(Buchberger, NonReducedBasisIsReported) {
  ToricRing ring(g3());
  auto basis = groebner_basis(ring);
  Binomial extra = basis[0];
  extra.lead = extra.lead * extra.lead;
  extra.trail = extra.trail * extra.trail;
  basis.push_back(extra);
  auto rep = buchberger_verify(ring, basis, MonomialOrder(3));
  EXPECT_FALSE(rep.reduced);
}

TEST(Buchberger, SizeLimit) {
  ToricRing ring(antichain_graph(5));
  EXPECT_THROW(buchberger_verify(ring, groebner_basis(ring), MonomialOrder(5), 16), LimitExceeded);
}

TEST(QuotientSeries, Examples) {
  EXPECT_EQ(monomial_quotient_series(4, {}), RationalSeries(IntPolynomial{1}, 4));
  std::vector<Monomial> one{mono({1, 1, 0, 1, 0})};
  EXPECT_EQ(monomial_quotient_series(5, one), RationalSeries(IntPolynomial{1, 0, 0, -1}, 5));
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::uint16_t> e(2 * n + 2, 0);
    for (int v = 0; v < n; ++v) e[v] = 1;
    e[2 * n] = 1;
    std::vector<Monomial> gens{Monomial(e)};
    EXPECT_EQ(monomial_quotient_series(2 * n + 2, gens), RationalSeries(ones(n), 2 * n + 1));
  }
}

// Pivot recursion against counting standard monomials degree by degree.
TEST(QuotientSeries, MatchesStandardMonomialCount) {
  for (const auto& g : {g3(), chain_graph(3), antichain_graph(2), complete_graph(2)}) {
    ToricRing ring(g);
    std::vector<Monomial> init = initial_ideal(groebner_basis(ring));
    RationalSeries s = monomial_quotient_series(ring.num_vars(), init);
    for (int d = 0; d <= 4; ++d) {
      ASSERT_EQ(s.coefficient(d), oracle::standard_monomials(ring.num_vars(), init, d));
    }
  }
  std::vector<Monomial> mixed{mono({2, 0, 1}), mono({1, 1, 0}), mono({0, 3, 0}), mono({0, 1, 2})};
  RationalSeries s = monomial_quotient_series(3, mixed);
  for (int d = 0; d <= 8; ++d) ASSERT_EQ(s.coefficient(d), oracle::standard_monomials(3, mixed, d));
}

TEST(InitialIdealSeries, Examples) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(series_via_initial_ideal(complete_graph(n)), RationalSeries(ones(n), 2 * n + 1));
  }
  EXPECT_EQ(series_via_initial_ideal(g3()), RationalSeries(IntPolynomial{1, 3, 3, 1}, 7));
  EXPECT_EQ(series_via_initial_ideal(antichain_graph(2)), vertex_cover_series(antichain_graph(2)));
}

TEST(StanleyReisner, Examples) {
  EXPECT_TRUE(stanley_reisner_check(build_lattice(complete_graph(3))));
  EXPECT_TRUE(stanley_reisner_check(build_lattice(g3())));
  EXPECT_TRUE(stanley_reisner_check(build_lattice(antichain_graph(2))));
  for (const auto& g : enumerate_standard_graphs(4)) ASSERT_TRUE(stanley_reisner_check(build_lattice(g)));
}

TEST(DirectCount, Examples) {
  for (const auto& g : {g3(), complete_graph(2), antichain_graph(3)}) {
    EXPECT_EQ(hilbert_function_direct(g, 0), 1u);
  }
  EXPECT_EQ(hilbert_function_direct(complete_graph(1), 1), 4u);
  EXPECT_EQ(hilbert_function_direct(complete_graph(2), 2), 21u);
  EXPECT_EQ(hilbert_function_direct(g3(), 1), 6u + 4u);
  EXPECT_THROW(hilbert_function_direct(g3(), 7), LimitExceeded);
  EXPECT_THROW(hilbert_function_direct(antichain_graph(5), 1), LimitExceeded);
}

// Counting through products of cover monomials agrees with counting
// exponent vectors that satisfy the k-cover condition.
TEST(DirectCount, MatchesKCoverDefinition) {
  for (const auto& g : {g3(), chain_graph(3), complete_graph(2), antichain_graph(2)}) {
    const int n = g.n();
    for (int d = 0; d <= 4; ++d) {
      std::uint64_t by_definition = 0;
      for (int k = 0; k <= d; ++k) {
        std::vector<int> c(2 * n, 0);
        auto rec = [&](auto&& self, int v, int left) -> void {
          if (v == 2 * n - 1) {
            c[v] = left;
            if (VertexCoverVector{c, k}.is_valid_for(g)) ++by_definition;
            return;
          }
          for (int a = 0; a <= left; ++a) {
            c[v] = a;
            self(self, v + 1, left - a);
          }
        };
        rec(rec, 0, k * n + d - k);
      }
      ASSERT_EQ(hilbert_function_direct(g, d), by_definition) << "d = " << d;
    }
  }
}

// With the only binomial of K_{n,n} removed there are no S-pairs left, so the
// series comparison is what exposes the damage.
TEST(InitialIdealSeries, DeletedBinomialChangesSeries) {
  ToricRing ring(complete_graph(2));
  auto basis = groebner_basis(ring);
  basis.clear();
  EXPECT_TRUE(buchberger_verify(ring, basis, MonomialOrder(2)).ok());
  EXPECT_NE(series_via_initial_ideal(ring, basis), vertex_cover_series(complete_graph(2)));
}
