#include "homotower/abelian.hpp"

#include <stdexcept>

namespace homotower {

IntMatrix relation_matrix(const Presentation& p) {
  const int n = p.ngens();
  IntMatrix m(p.relators.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    auto e = exponent_vector(p.relators[i], n);
    for (std::size_t j = 0; j < e.size(); ++j) m.at(i, j) = e[j];
  }
  return m;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  SnfResult snf = smith_normal_form(relation_matrix(p));
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const BigInt& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.betti = static_cast<std::size_t>(p.ngens()) - nonzero;
  return inv;
}

PHom elementary_abelian_quotient(const Presentation& p, std::uint32_t prime) {
  if (prime == 2 || !is_prime(prime))
    throw std::invalid_argument("elementary abelian quotient needs an odd prime");
  const std::size_t n = static_cast<std::size_t>(p.ngens());

  FpEchelon e = fp_echelon(modp_reduce(relation_matrix(p), prime));
  std::vector<std::size_t> free_cols;
  {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }

  PHom h;
  h.p = prime;
  h.rank = free_cols.size();
  h.images.assign(n, std::vector<std::uint32_t>(h.rank, 0));
  // Quotient coordinates: a free column maps to its unit vector, a pivot
  // column to minus its RREF row restricted to the free columns.
  for (std::size_t k = 0; k < free_cols.size(); ++k) h.images[free_cols[k]][k] = 1;
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      std::uint32_t coef = e.rref.at(r, free_cols[k]);
      if (coef) h.images[e.pivots[r]][k] = prime - coef;
    }
  return h;
}

}  // namespace homotower
