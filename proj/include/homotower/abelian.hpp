#ifndef HOMOTOWER_ABELIAN_HPP
#define HOMOTOWER_ABELIAN_HPP

#include <cstdint>
#include <vector>

#include "homotower/exactlinalg.hpp"
#include "homotower/fpres.hpp"

namespace homotower {

/// H_1 of the presented group: free rank plus torsion in divisor order.
struct AbelianInvariants {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  bool operator==(const AbelianInvariants&) const = default;
};

/// A surjection onto (Z/pZ)^rank, given by generator images.
struct PHom {
  std::uint32_t p = 3;
  std::size_t rank = 0;
  std::vector<std::vector<std::uint32_t>> images;  // one vector per generator

  bool operator==(const PHom&) const = default;
};

/// |relators| x |generators| matrix whose row i is the exponent vector
/// of relator i.
IntMatrix relation_matrix(const Presentation& p);

AbelianInvariants abelian_invariants(const Presentation& p);

/// The maximal elementary abelian p-quotient, p an odd prime.  Images
/// are the coordinates of each generator in the reduced-echelon basis
/// completion of F_p^n / rowspace(relation matrix mod p).
PHom elementary_abelian_quotient(const Presentation& p, std::uint32_t prime);

}  // namespace homotower

#endif
