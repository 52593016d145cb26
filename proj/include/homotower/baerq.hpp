#ifndef HOMOTOWER_BAERQ_HPP
#define HOMOTOWER_BAERQ_HPP

#include <cstdint>
#include <vector>

#include "homotower/fpres.hpp"

namespace homotower {

/// An element of the free class-2 exponent-p group on n generators,
/// p >= 3, in Baer coordinates: a linear part v in F_p^n and a
/// commutator part w in Lambda^2 F_p^n (coordinates indexed by pairs
/// i < j in lexicographic order).  The group law is
///
///   (v, w) o (v', w') = (v + v', w + w' + (1/2) * (v ^ v'))
///
/// with identity (0, 0) and inverse (-v, -w); every element has order
/// dividing p.
struct BaerElement {
  std::uint32_t p;
  std::vector<std::uint32_t> v;
  std::vector<std::uint32_t> w;
};

/// Coordinate of e_i ^ e_j (0-based, i < j) in Lambda^2 F_p^n.
std::size_t wedge_index(int n, int i, int j);

BaerElement baer_identity(std::uint32_t p, int n);

/// Image of the k-th generator (1-based): (e_k, 0).
BaerElement baer_generator(std::uint32_t p, int n, int k);

BaerElement baer_mul(const BaerElement& a, const BaerElement& b);
BaerElement baer_inv(const BaerElement& a);

/// Homomorphic evaluation of a word at the given generator images.
/// All images must share (p, n); the identity word evaluates to the
/// identity.  Throws std::invalid_argument for p < 3 or mismatches.
BaerElement baer_eval(const Word& word, const std::vector<BaerElement>& images);

/// Dimension count for the quotient of the free class-2 exponent-p
/// group on the presentation's generators by its relators, computed on
/// the Lie-algebra side (V + Lambda^2 V modulo the relator-generated
/// ideal).  elementary_abelian holds exactly when the class-2 part dies,
/// i.e. dim_total == dim_linear.
struct BaerQuotientReport {
  std::uint32_t p;
  int n;
  int dim_total;
  int dim_linear;
  bool elementary_abelian;
};

BaerQuotientReport class2_expp_quotient(const Presentation& pres,
                                        std::uint32_t p);

/// Certificate that the full exponent-p quotient of the presented group
/// is elementary abelian of the given rank.  The inference from the
/// class-2 computation ("the class-2 image is abelian, hence the
/// exponent-p quotient itself is") needs the exponent-p quotient to be
/// nilpotent; for p = 3 that is classical (Levi-van der Waerden), so
/// `unconditional` is true.  For p > 3 the certificate only asserts
/// class-2-elementarity and `unconditional` is false.
struct ExpPCertificate {
  bool elementary;
  int rank;
  bool unconditional;
};

ExpPCertificate certify_expp_elementary(const Presentation& pres,
                                        std::uint32_t p);

}  // namespace homotower

#endif
