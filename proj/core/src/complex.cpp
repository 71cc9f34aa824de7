#include "covalg/complex.hpp"

#include "covalg/errors.hpp"

#include <bit>
#include <cstdint>

namespace covalg {

namespace {

void add_checked(std::uint64_t& acc, std::uint64_t v) {
  if (__builtin_add_overflow(acc, v, &acc)) {
    throw LimitExceeded("chain count exceeds 64-bit range");
  }
}

}  // namespace

FVector order_complex(const CoverLattice& lattice) {
  const std::size_t size = lattice.size();
  FVector out;
  out.f.push_back(1);
  if (size == 0) return out;

  const int max_len = lattice.n() + 1;
  // chains[e * stride + s]: chains of s + 1 elements whose largest is e.
  const std::size_t stride = static_cast<std::size_t>(max_len);
  std::vector<std::uint64_t> chains(size * stride, 0);
  const bool dense = lattice.n() <= kDenseIndexBits;

  for (std::size_t e = 0; e < size; ++e) {
    const Subset top = lattice.element(e);
    std::uint64_t* row = &chains[e * stride];
    row[0] = 1;
    auto absorb = [&](std::size_t a) {
      const std::uint64_t* below = &chains[a * stride];
      for (std::size_t s = 1; s < stride; ++s) add_checked(row[s], below[s - 1]);
    };
    const std::size_t submask_cost = std::size_t{1} << std::popcount(top);
    if (dense && submask_cost < e) {
      for (Subset sub = (top - 1) & top;; sub = (sub - 1) & top) {
        int idx = lattice.index_of(sub);
        if (idx >= 0) absorb(static_cast<std::size_t>(idx));
        if (sub == 0) break;
      }
    } else {
      for (std::size_t a = 0; a < e; ++a) {
        Subset s = lattice.element(a);
        if ((s & top) == s && s != top) absorb(a);
      }
    }
  }

  std::vector<std::uint64_t> totals(stride, 0);
  for (std::size_t e = 0; e < size; ++e) {
    for (std::size_t s = 0; s < stride; ++s) add_checked(totals[s], chains[e * stride + s]);
  }
  while (!totals.empty() && totals.back() == 0) totals.pop_back();
  for (std::uint64_t t : totals) out.f.emplace_back(t);
  return out;
}

std::vector<std::vector<Subset>> order_complex_faces(const CoverLattice& lattice,
                                                     std::size_t max_elements) {
  const std::size_t size = lattice.size();
  if (size > max_elements || size > 30) {
    throw LimitExceeded("explicit faces limited to lattices with " +
                        std::to_string(max_elements) + " elements");
  }
  std::vector<std::vector<Subset>> faces;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << size); ++pick) {
    std::vector<Subset> face;
    for (std::size_t k = 0; k < size; ++k) {
      if (pick >> k & 1) face.push_back(lattice.element(k));
    }
    bool chain = true;
    for (std::size_t a = 0; a < face.size() && chain; ++a) {
      for (std::size_t b = a + 1; b < face.size() && chain; ++b) {
        Subset meet = face[a] & face[b];
        chain = meet == face[a] || meet == face[b];
      }
    }
    if (chain) faces.push_back(std::move(face));
  }
  return faces;
}

HVector h_vector(const FVector& f) {
  const int d = f.dimension();
  IntPolynomial sum;
  for (int i = 0; i <= d; ++i) {
    sum += IntPolynomial::monomial(i, f.f[i]) * IntPolynomial::one_minus_z_pow(d - i);
  }
  HVector out;
  out.h.assign(d + 1, 0);
  for (int j = 0; j <= d; ++j) out.h[j] = sum.coefficient(j);
  return out;
}

RationalSeries basic_cover_series(const CoverLattice& lattice) {
  const int r = rank(lattice);
  FVector f = order_complex(lattice);
  if (f.dimension() != r + 1) {
    throw InconsistencyError("longest chain disagrees with the lattice rank");
  }
  return RationalSeries(h_vector(f).polynomial(), r + 1);
}

RationalSeries basic_cover_series(const BipartiteGraph& g) {
  return basic_cover_series(build_lattice(standard_form(g)));
}

}  // namespace covalg
