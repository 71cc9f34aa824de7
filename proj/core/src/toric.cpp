#include "covalg/toric.hpp"

#include "covalg/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace covalg {

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] > other.exps_[v]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.num_vars());
  for (std::size_t v = 0; v < a.num_vars(); ++v) out[v] = a[v] + b[v];
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out(a.num_vars());
  for (std::size_t v = 0; v < a.num_vars(); ++v) {
    if (b[v] > a[v]) throw std::invalid_argument("monomial quotient is not exact");
    out[v] = a[v] - b[v];
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.num_vars());
  for (std::size_t v = 0; v < a.num_vars(); ++v) out[v] = std::max(a[v], b[v]);
  return out;
}

ToricRing::ToricRing(const BipartiteGraph& g)
    : graph_(standard_form(g)), lattice_(build_lattice(graph_)) {
  n_ = graph_.n();
}

std::size_t ToricRing::u_var(Subset alpha) const {
  int idx = lattice_.index_of(alpha);
  if (idx < 0) throw std::invalid_argument("subset is not an element of the lattice");
  return 2 * static_cast<std::size_t>(n_) + static_cast<std::size_t>(idx);
}

std::string ToricRing::var_name(std::size_t v) const {
  const auto n = static_cast<std::size_t>(n_);
  if (v < n) return "x" + std::to_string(v + 1);
  if (v < 2 * n) return "y" + std::to_string(v - n + 1);
  std::string out = "u{";
  bool first = true;
  for (int i : mask_to_indices(lattice_.element(v - 2 * n))) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string ToricRing::to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t v = 0; v < m.num_vars(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

Monomial ToricRing::cover_monomial(Subset alpha) const {
  Monomial m(num_vars());
  for (int k = 1; k <= n_; ++k) {
    if (alpha >> (k - 1) & 1) {
      m[x_var(k)] = 1;
    } else {
      m[y_var(k)] = 1;
    }
  }
  return m;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t vars = a.num_vars();
  for (std::size_t v = 0; v < split_ && v < vars; ++v) {
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  int da = 0, db = 0;
  for (std::size_t v = split_; v < vars; ++v) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da > db ? 1 : -1;
  // Smallest variable first; the larger exponent there makes the monomial smaller.
  for (std::size_t v = split_; v < vars; ++v) {
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

std::vector<Binomial> groebner_basis(const ToricRing& ring) {
  const CoverLattice& lat = ring.lattice();
  std::vector<Binomial> basis;
  for (auto [alpha, beta] : covering_pairs(lat)) {
    Binomial b{Monomial(ring.num_vars()), Monomial(ring.num_vars())};
    for (int i : mask_to_indices(beta & ~alpha)) {
      b.lead[ring.x_var(i)] += 1;
      b.trail[ring.y_var(i)] += 1;
    }
    b.lead[ring.u_var(alpha)] += 1;
    b.trail[ring.u_var(beta)] += 1;
    basis.push_back(std::move(b));
  }
  for (auto [alpha, beta] : incomparable_pairs(lat)) {
    Binomial b{Monomial(ring.num_vars()), Monomial(ring.num_vars())};
    b.lead[ring.u_var(alpha)] += 1;
    b.lead[ring.u_var(beta)] += 1;
    b.trail[ring.u_var(alpha | beta)] += 1;
    b.trail[ring.u_var(alpha & beta)] += 1;
    basis.push_back(std::move(b));
  }
  return basis;
}

std::vector<Monomial> initial_ideal(std::span<const Binomial> basis) {
  std::vector<Monomial> leads;
  for (const Binomial& b : basis) leads.push_back(b.lead);
  std::sort(leads.begin(), leads.end());
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<Monomial> minimal;
  for (std::size_t a = 0; a < leads.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < leads.size() && !redundant; ++b) {
      redundant = b != a && leads[b].divides(leads[a]);
    }
    if (!redundant) minimal.push_back(leads[a]);
  }
  return minimal;
}

namespace {

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

using SparsePoly = std::map<Monomial, long long, Descending>;

void add_term(SparsePoly& p, const Monomial& m, long long c) {
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// Full normal form of p modulo the binomials (lead, trail) given in `gens`;
// returns the number of remainder terms.
std::size_t remainder_terms(SparsePoly p, const std::vector<Binomial>& gens) {
  std::size_t remainder = 0;
  while (!p.empty()) {
    auto it = p.begin();
    const Monomial m = it->first;
    const long long c = it->second;
    const Binomial* divisor = nullptr;
    for (const Binomial& g : gens) {
      if (g.lead.divides(m)) {
        divisor = &g;
        break;
      }
    }
    p.erase(it);
    if (divisor == nullptr) {
      ++remainder;
      continue;
    }
    // p - c * q * (lead - trail) with q * lead == m.
    add_term(p, (m / divisor->lead) * divisor->trail, c);
  }
  return remainder;
}

}  // namespace

BuchbergerReport buchberger_verify(const ToricRing& ring, std::span<const Binomial> basis,
                                   const MonomialOrder& order, std::size_t max_lattice_size) {
  if (ring.lattice().size() > max_lattice_size) {
    throw LimitExceeded("Buchberger check limited to lattices with " +
                        std::to_string(max_lattice_size) + " elements");
  }
  BuchbergerReport report;
  auto fail = [&](std::string msg) {
    if (!report.first_failure) report.first_failure = std::move(msg);
  };
  auto describe = [&](const Binomial& b) {
    return ring.to_string(b.lead) + " - " + ring.to_string(b.trail);
  };

  // Division uses the true leading terms, so a mislabelled binomial cannot
  // stall the reduction; it is reported separately.
  std::vector<Binomial> gens(basis.begin(), basis.end());
  for (Binomial& b : gens) {
    if (!order.greater(b.lead, b.trail)) {
      report.leads_correct = false;
      fail("lead term is not the larger term in " + describe(b));
      if (order.greater(b.trail, b.lead)) std::swap(b.lead, b.trail);
    }
  }

  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      if (a == b) continue;
      if (gens[b].lead.divides(gens[a].lead)) {
        report.reduced = false;
        fail("lead of " + describe(gens[b]) + " divides lead of " + describe(gens[a]));
      }
      if (gens[b].lead.divides(gens[a].trail)) {
        report.reduced = false;
        fail("lead of " + describe(gens[b]) + " divides trail of " + describe(gens[a]));
      }
    }
  }

  const Descending cmp{&order};
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      ++report.pairs_checked;
      const Monomial l = lcm(gens[a].lead, gens[b].lead);
      // S = (l / lead_a) f_a - (l / lead_b) f_b; the lead terms cancel.
      SparsePoly s(cmp);
      add_term(s, (l / gens[a].lead) * gens[a].trail, -1);
      add_term(s, (l / gens[b].lead) * gens[b].trail, 1);
      if (remainder_terms(std::move(s), gens) != 0) {
        ++report.nonzero_remainders;
        fail("S-pair of " + describe(gens[a]) + " and " + describe(gens[b]) +
             " has a nonzero normal form");
      }
    }
  }
  return report;
}

RationalSeries series_via_initial_ideal(const ToricRing& ring, std::span<const Binomial> basis) {
  std::vector<Monomial> init = initial_ideal(basis);
  return monomial_quotient_series(ring.num_vars(), init);
}

RationalSeries series_via_initial_ideal(const BipartiteGraph& g) {
  ToricRing ring(g);
  std::vector<Binomial> basis = groebner_basis(ring);
  return series_via_initial_ideal(ring, basis);
}

bool stanley_reisner_check(const CoverLattice& lattice, std::size_t max_elements) {
  const std::size_t size = lattice.size();
  if (size > max_elements) {
    throw LimitExceeded("Stanley-Reisner check limited to lattices with " +
                        std::to_string(max_elements) + " elements");
  }
  auto comparable = [&](std::size_t a, std::size_t b) {
    Subset meet = lattice.element(a) & lattice.element(b);
    return meet == lattice.element(a) || meet == lattice.element(b);
  };

  // Faces of Δ(L): chains, listed as increasing index sequences.
  std::set<std::vector<std::size_t>> faces;
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    faces.insert(chain);
    for (std::size_t e = from; e < size; ++e) {
      if (!chain.empty() && !comparable(chain.back(), e)) continue;
      chain.push_back(e);
      self(self, e + 1);
      chain.pop_back();
    }
  };
  extend(extend, 0);

  // Every proper subset of a minimal non-face is a face, so each one is a
  // face plus one element.
  std::set<std::vector<std::size_t>> min_nonfaces;
  for (const auto& face : faces) {
    for (std::size_t e = 0; e < size; ++e) {
      if (std::binary_search(face.begin(), face.end(), e)) continue;
      std::vector<std::size_t> cand = face;
      cand.insert(std::upper_bound(cand.begin(), cand.end(), e), e);
      if (faces.contains(cand)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < cand.size() && minimal; ++drop) {
        std::vector<std::size_t> sub = cand;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        minimal = faces.contains(sub);
      }
      if (minimal) min_nonfaces.insert(std::move(cand));
    }
  }

  // Lead terms of the quadratic family under the u-block order alone.
  const MonomialOrder order(0);
  std::set<std::vector<std::size_t>> leads;
  for (auto [alpha, beta] : incomparable_pairs(lattice)) {
    Monomial m(size), t(size);
    m[static_cast<std::size_t>(lattice.index_of(alpha))] += 1;
    m[static_cast<std::size_t>(lattice.index_of(beta))] += 1;
    t[static_cast<std::size_t>(lattice.index_of(alpha | beta))] += 1;
    t[static_cast<std::size_t>(lattice.index_of(alpha & beta))] += 1;
    const Monomial& lead = order.greater(m, t) ? m : t;
    if (!lead.is_squarefree()) return false;
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < size; ++v) {
      if (lead[v] != 0) support.push_back(v);
    }
    leads.insert(std::move(support));
  }
  return leads == min_nonfaces;
}

std::string groebner_to_text(const ToricRing& ring, std::span<const Binomial> basis) {
  std::string out;
  for (const Binomial& b : basis) {
    out += ring.to_string(b.lead) + " - " + ring.to_string(b.trail) + "\n";
  }
  return out;
}

}  // namespace covalg
