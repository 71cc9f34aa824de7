#pragma once

#include "covalg/bigint.hpp"
#include "covalg/graph.hpp"
#include "covalg/lattice.hpp"
#include "covalg/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace covalg {

// Exponent vector over a fixed variable list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {}

  std::size_t num_vars() const { return exps_.size(); }
  std::uint16_t operator[](std::size_t v) const { return exps_[v]; }
  std::uint16_t& operator[](std::size_t v) { return exps_[v]; }
  const std::vector<std::uint16_t>& exponents() const { return exps_; }

  int degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  // True iff this divides `other`.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Plain lexicographic comparison of exponent vectors, for containers only.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint16_t> exps_;
};

// Variables x_1..x_n, y_1..y_n, then u_alpha for every alpha of L_G in
// canonical order (cardinality, then lexicographic). Variable indices are
// 0-based: x_i -> i-1, y_j -> n+j-1, u_alpha -> 2n + index(alpha).
class ToricRing {
 public:
  // Standardizes g when needed and builds its lattice.
  explicit ToricRing(const BipartiteGraph& g);

  int n() const { return n_; }
  const BipartiteGraph& graph() const { return graph_; }
  const CoverLattice& lattice() const { return lattice_; }
  std::size_t num_vars() const { return 2 * static_cast<std::size_t>(n_) + lattice_.size(); }

  std::size_t x_var(int i) const { return static_cast<std::size_t>(i - 1); }
  std::size_t y_var(int j) const { return static_cast<std::size_t>(n_ + j - 1); }
  std::size_t u_var(Subset alpha) const;

  // "x3", "y1", "u{}", "u{2,3}".
  std::string var_name(std::size_t v) const;
  std::string to_string(const Monomial& m) const;

  // The image m_alpha of u_alpha in S: prod_{p_i in alpha} x_i prod_{p_j not in alpha} y_j,
  // as an exponent vector over all ring variables (u-part zero).
  Monomial cover_monomial(Subset alpha) const;

 private:
  int n_ = 0;
  BipartiteGraph graph_;
  CoverLattice lattice_;
};

// Product order: lexicographic on x_1 > ... > x_n > y_1 > ... > y_n, then
// degree reverse lexicographic on the u-variables with u_alpha > u_beta
// whenever index(alpha) > index(beta). The canonical element order is a
// linear extension of inclusion, so u_alpha > u_beta whenever beta ⊂ alpha.
class MonomialOrder {
 public:
  explicit MonomialOrder(int n) : split_(2 * static_cast<std::size_t>(n)) {}

  // -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  std::size_t split_;
};

// lead - trail.
struct Binomial {
  Monomial lead;
  Monomial trail;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

// x_{β∖α} u_α - y_{β∖α} u_β for every covering pair α < β, followed by
// u_α u_β - u_{α∪β} u_{α∩β} for every unordered incomparable pair.
std::vector<Binomial> groebner_basis(const ToricRing& ring);

// Minimal generators of the ideal of lead terms, sorted.
std::vector<Monomial> initial_ideal(std::span<const Binomial> basis);

struct BuchbergerReport {
  std::size_t pairs_checked = 0;
  std::size_t nonzero_remainders = 0;
  // Each lead is larger than its trail under the order.
  bool leads_correct = true;
  // No lead divides another lead, and no trail is divisible by a lead.
  bool reduced = true;
  std::optional<std::string> first_failure;

  bool ok() const { return nonzero_remainders == 0 && leads_correct && reduced; }
};

// Reduces every S-polynomial of every pair by the full division algorithm.
// No pair-pruning criteria are applied. Throws LimitExceeded when
// |L_G| > max_lattice_size.
BuchbergerReport buchberger_verify(const ToricRing& ring, std::span<const Binomial> basis,
                                   const MonomialOrder& order,
                                   std::size_t max_lattice_size = 32);

// Hilbert series of k[x_1..x_v]/(gens) with every variable of degree 1, by
// pivot-variable recursion H(I) = H(I + x) + z H(I : x) with memoization.
RationalSeries monomial_quotient_series(std::size_t num_vars, std::span<const Monomial> gens);

// monomial_quotient_series over the ring variables with the initial ideal of
// groebner_basis as generators.
RationalSeries series_via_initial_ideal(const BipartiteGraph& g);
RationalSeries series_via_initial_ideal(const ToricRing& ring, std::span<const Binomial> basis);

// The u-only lead terms of the quadratic family generate exactly the
// Stanley-Reisner ideal of Δ(L), whose minimal non-faces are computed from
// the chains of L. Throws LimitExceeded when |L| > max_elements.
bool stanley_reisner_check(const CoverLattice& lattice, std::size_t max_elements = 64);

struct DirectCountLimits {
  int max_n = 4;
  int max_degree = 6;
};

// dim_K A(G)_d: monomials x^a y^b t^k with k <= d, |a| + |b| = kn + d - k and
// x^a y^b a product of k cover monomials m_alpha times a monomial. Throws
// LimitExceeded outside `limits`.
std::uint64_t hilbert_function_direct(const BipartiteGraph& g, int degree,
                                      const DirectCountLimits& limits = {});

// One binomial per line, lead first: "x1*u{} - y1*u{1}".
std::string groebner_to_text(const ToricRing& ring, std::span<const Binomial> basis);

}  // namespace covalg
