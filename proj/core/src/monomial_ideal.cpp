#include "covalg/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace covalg {

namespace {

using Gens = std::vector<Monomial>;

// Drops generators divisible by another one; sorted output doubles as a memo key.
Gens minimalize(Gens gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  Gens kept;
  for (Monomial& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

class QuotientNumerator {
 public:
  explicit QuotientNumerator(std::size_t num_vars) : num_vars_(num_vars) {}

  // K-polynomial: H(S/I) * (1 - z)^num_vars.
  IntPolynomial eval(Gens gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return IntPolynomial{1};
    if (gens.front().is_one()) return IntPolynomial{};
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    IntPolynomial result;
    std::vector<Gens> parts = split_components(gens);
    if (parts.size() > 1) {
      result = IntPolynomial{1};
      for (Gens& part : parts) {
        if (part.size() == 1) {
          result = result * (IntPolynomial{1} - IntPolynomial::monomial(part[0].degree()));
        } else {
          result = result * eval(std::move(part));
        }
      }
    } else if (gens.size() == 1) {
      result = IntPolynomial{1} - IntPolynomial::monomial(gens[0].degree());
    } else {
      const std::size_t x = pivot(gens);
      Gens plus, colon;
      Monomial var(num_vars_);
      var[x] = 1;
      plus.push_back(var);
      for (const Monomial& m : gens) {
        if (m[x] == 0) plus.push_back(m);
        Monomial c = m;
        if (c[x] > 0) c[x] -= 1;
        colon.push_back(std::move(c));
      }
      result = eval(std::move(plus)) + IntPolynomial::monomial(1) * eval(std::move(colon));
    }
    memo_.emplace(gens, result);
    return result;
  }

 private:
  // Variable dividing the most generators.
  std::size_t pivot(const Gens& gens) const {
    std::vector<int> count(num_vars_, 0);
    for (const Monomial& m : gens) {
      for (std::size_t v = 0; v < num_vars_; ++v) count[v] += m[v] > 0;
    }
    return static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  }

  // Generators grouped by shared variables; the quotient is a tensor product
  // over the groups.
  std::vector<Gens> split_components(const Gens& gens) const {
    std::vector<std::size_t> parent(gens.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::vector<std::size_t> owner(num_vars_, gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (std::size_t v = 0; v < num_vars_; ++v) {
        if (gens[g][v] == 0) continue;
        if (owner[v] == gens.size()) {
          owner[v] = g;
        } else {
          parent[find(g)] = find(owner[v]);
        }
      }
    }
    std::map<std::size_t, Gens> groups;
    for (std::size_t g = 0; g < gens.size(); ++g) groups[find(g)].push_back(gens[g]);
    std::vector<Gens> out;
    for (auto& [root, part] : groups) out.push_back(std::move(part));
    return out;
  }

  std::size_t num_vars_;
  std::map<Gens, IntPolynomial> memo_;
};

}  // namespace

RationalSeries monomial_quotient_series(std::size_t num_vars, std::span<const Monomial> gens) {
  for (const Monomial& m : gens) {
    if (m.num_vars() != num_vars) {
      throw std::invalid_argument("generator has the wrong number of variables");
    }
  }
  QuotientNumerator numerator(num_vars);
  return RationalSeries(numerator.eval(Gens(gens.begin(), gens.end())),
                        static_cast<int>(num_vars));
}

}  // namespace covalg
