#include "covalg/series.hpp"

#include "covalg/complex.hpp"
#include "covalg/errors.hpp"
#include "covalg/lattice.hpp"

#include <bit>
#include <exception>
#include <mutex>
#include <thread>

namespace covalg {

namespace {

SubsetTerm compute_term(const BipartiteGraph& g, IndexMask subset) {
  CoverLattice lattice = build_lattice(g, subset);
  HasseSummary hasse = hasse_summary(lattice);
  if (hasse.shortest_maximal_chain != hasse.longest_maximal_chain) {
    throw NonGradedLattice("lattice of an induced subgraph is not graded");
  }
  SubsetTerm term;
  term.subset = subset;
  term.size = std::popcount(subset);
  term.rank = hasse.longest_maximal_chain;
  term.lattice_size = lattice.size();
  FVector f = order_complex(lattice);
  if (f.dimension() != term.rank + 1) {
    throw InconsistencyError("longest chain disagrees with the lattice rank");
  }
  term.h = h_vector(f).polynomial();
  term.maximal_chains = std::move(hasse.maximal_chains);
  return term;
}

}  // namespace

SubsetSweep sweep_subsets(const BipartiteGraph& g, const SweepOptions& opts) {
  if (!g.is_standard()) throw std::invalid_argument("sweep requires a standard graph");
  if (g.n() > opts.max_n) {
    throw LimitExceeded("subset sweep limited to n <= " + std::to_string(opts.max_n));
  }
  const std::size_t total = std::size_t{1} << g.n();
  SubsetSweep sweep;
  sweep.n = g.n();
  sweep.terms.resize(total);

  unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));

  // Each worker owns the masks congruent to its id; slots are disjoint, so the
  // assembled sweep is independent of the thread count.
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned id) {
    try {
      for (std::size_t mask = id; mask < total; mask += threads) {
        sweep.terms[mask] = compute_term(g, mask);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return sweep;
}

RationalSeries series_by_subset_sum(const SubsetSweep& sweep) {
  const int n = sweep.n;
  const RationalSeries z_over(IntPolynomial::monomial(1), 1);  // z/(1-z)
  RationalSeries sum;
  for (const SubsetTerm& t : sweep.terms) {
    RationalSeries term(t.h, t.rank + 1);
    for (int k = 0; k < n - t.size; ++k) term = term * z_over;
    sum = sum + term;
  }
  return sum * RationalSeries(IntPolynomial{1}, n);
}

IntPolynomial h_by_subset_sum(const SubsetSweep& sweep) {
  IntPolynomial sum;
  for (const SubsetTerm& t : sweep.terms) {
    sum += t.h * IntPolynomial::one_minus_z_pow(t.size - t.rank) *
           IntPolynomial::monomial(sweep.n - t.size);
  }
  return sum;
}

BigInt multiplicity_by_cm_sum(const SubsetSweep& sweep) {
  BigInt sum = 0;
  for (const SubsetTerm& t : sweep.terms) {
    if (t.cohen_macaulay()) sum += t.h.evaluate_at_one();
  }
  return sum;
}

BigInt multiplicity_by_chain_count(const SubsetSweep& sweep) {
  BigInt sum = 0;
  for (const SubsetTerm& t : sweep.terms) {
    if (t.cohen_macaulay()) sum += t.maximal_chains;
  }
  return sum;
}

RationalSeries vertex_cover_series(const BipartiteGraph& g, const SweepOptions& opts) {
  BipartiteGraph std_g = standard_form(g);
  RationalSeries series = series_by_subset_sum(sweep_subsets(std_g, opts));
  if (series.denom_power() != 2 * std_g.n() + 1) {
    throw InconsistencyError("Hilbert series has denominator power " +
                             std::to_string(series.denom_power()) + ", expected " +
                             std::to_string(2 * std_g.n() + 1));
  }
  return series;
}

IntPolynomial h_polynomial(const BipartiteGraph& g, const SweepOptions& opts) {
  BipartiteGraph std_g = standard_form(g);
  SubsetSweep sweep = sweep_subsets(std_g, opts);
  IntPolynomial h = h_by_subset_sum(sweep);
  RationalSeries series = series_by_subset_sum(sweep);
  if (!(series == RationalSeries(h, 2 * std_g.n() + 1)) ||
      series.denom_power() != 2 * std_g.n() + 1) {
    throw InconsistencyError("subset-sum h-polynomial " + h.to_string() +
                             " disagrees with series " + series.to_string());
  }
  return h;
}

BigInt multiplicity(const BipartiteGraph& g, const SweepOptions& opts) {
  BipartiteGraph std_g = standard_form(g);
  SubsetSweep sweep = sweep_subsets(std_g, opts);
  BigInt by_cm = multiplicity_by_cm_sum(sweep);
  BigInt by_h = h_by_subset_sum(sweep).evaluate_at_one();
  BigInt by_chains = multiplicity_by_chain_count(sweep);
  if (by_cm != by_h || by_cm != by_chains) {
    throw InconsistencyError("multiplicity routes disagree: " + by_cm.str() + ", " +
                             by_h.str() + ", " + by_chains.str());
  }
  return by_cm;
}

std::pair<BigInt, BigInt> multiplicity_bounds(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  // n! / l! summed over l = 0..n, accumulated from l = n downwards.
  BigInt upper = 0, falling = 1;
  for (int l = n; l >= 0; --l) {
    upper += falling;
    falling *= l;
  }
  return {BigInt(n + 1), upper};
}

bool check_gorenstein_symmetry(const IntPolynomial& h, int n) {
  if (h.degree() > n || h.coefficient(n) != 1) return false;
  for (int i = 0; i <= n; ++i) {
    if (h.coefficient(i) != h.coefficient(n - i)) return false;
  }
  return true;
}

int a_invariant(const RationalSeries& series) {
  return series.numerator().degree() - series.denom_power();
}

RationalSeries complete_graph_series(int n) {
  std::vector<BigInt> ones(n + 1, 1);
  return RationalSeries(IntPolynomial(std::move(ones)), 2 * n + 1);
}

bool is_knn_by_series(const BipartiteGraph& g, const SweepOptions& opts) {
  BipartiteGraph std_g = standard_form(g);
  bool by_series = vertex_cover_series(std_g, opts) == complete_graph_series(std_g.n());
  bool by_lattice = build_lattice(std_g).size() == 2;
  if (by_series != by_lattice) {
    throw InconsistencyError("series test and lattice-size test for K_{n,n} disagree");
  }
  return by_series;
}

}  // namespace covalg
