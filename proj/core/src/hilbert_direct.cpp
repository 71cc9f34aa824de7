#include "covalg/errors.hpp"
#include "covalg/toric.hpp"

#include <map>

namespace covalg {

namespace {

using Exponents = std::vector<std::uint8_t>;

class PowerMembership {
 public:
  explicit PowerMembership(std::vector<Exponents> generators)
      : generators_(std::move(generators)) {}

  // r is divisible by a product of k generators.
  bool contains(const Exponents& r, int k) {
    if (k == 0) return true;
    auto key = std::make_pair(r, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool found = false;
    for (const Exponents& gen : generators_) {
      Exponents rest = r;
      bool divides = true;
      for (std::size_t v = 0; v < r.size() && divides; ++v) {
        divides = gen[v] <= r[v];
        rest[v] = static_cast<std::uint8_t>(r[v] - (divides ? gen[v] : 0));
      }
      if (divides && contains(rest, k - 1)) {
        found = true;
        break;
      }
    }
    memo_.emplace(std::move(key), found);
    return found;
  }

 private:
  std::vector<Exponents> generators_;
  std::map<std::pair<Exponents, int>, bool> memo_;
};

}  // namespace

std::uint64_t hilbert_function_direct(const BipartiteGraph& g, int degree,
                                      const DirectCountLimits& limits) {
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  if (g.n() > limits.max_n || degree > limits.max_degree) {
    throw LimitExceeded("direct count limited to n <= " + std::to_string(limits.max_n) +
                        " and degree <= " + std::to_string(limits.max_degree));
  }
  const BipartiteGraph std_g = standard_form(g);
  const int n = std_g.n();

  // Generators of I_G: the minimal vertex covers, as exponents over x_1..x_n, y_1..y_n.
  std::vector<Exponents> generators;
  for (const VertexCover& c : minimal_covers_bruteforce(std_g)) {
    Exponents e(2 * n, 0);
    for (int k = 0; k < n; ++k) {
      e[k] = c.x >> k & 1;
      e[n + k] = c.y >> k & 1;
    }
    generators.push_back(std::move(e));
  }
  PowerMembership member(std::move(generators));

  // Every generator holds exactly one of x_i, y_i, so a member of I^k has
  // a_i + b_i >= k. Candidates are therefore pairs with a_i + b_i = k + s_i
  // where the excesses s_i sum to degree - k.
  std::uint64_t total = 0;
  Exponents e(2 * n, 0);
  for (int k = 0; k <= degree; ++k) {
    auto place = [&](auto&& self, int i, int excess_left) -> void {
      if (i == n) {
        if (excess_left == 0 && member.contains(e, k)) ++total;
        return;
      }
      const int lo = i == n - 1 ? excess_left : 0;
      for (int s = lo; s <= excess_left; ++s) {
        const int pair_total = k + s;
        for (int a = 0; a <= pair_total; ++a) {
          e[i] = static_cast<std::uint8_t>(a);
          e[n + i] = static_cast<std::uint8_t>(pair_total - a);
          self(self, i + 1, excess_left - s);
        }
      }
    };
    place(place, 0, degree - k);
  }
  return total;
}

}  // namespace covalg
