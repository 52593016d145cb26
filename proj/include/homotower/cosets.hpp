#ifndef HOMOTOWER_COSETS_HPP
#define HOMOTOWER_COSETS_HPP

#include <cstdint>
#include <vector>

#include "homotower/abelian.hpp"
#include "homotower/fpres.hpp"

namespace homotower {

/// The action of generators on the right cosets of a finite-index
/// subgroup.  Coset 0 is the subgroup itself.  Each generator acts as a
/// permutation; its inverse letter acts as the inverse permutation.
class CosetTable {
 public:
  CosetTable() = default;

  /// forward[g] is the permutation of generator g+1; inverses are
  /// derived.  Throws std::invalid_argument if some row is not a
  /// permutation.
  CosetTable(int ngens, std::vector<std::vector<int>> forward);

  int ngens() const { return ngens_; }
  int size() const { return static_cast<int>(fwd_.empty() ? 0 : fwd_[0].size()); }

  /// Image of a coset under one signed letter.
  int apply(int coset, Letter l) const {
    return l > 0 ? fwd_[l - 1][coset] : bwd_[-l - 1][coset];
  }

  /// Forward permutation of generator g (1-based).
  const std::vector<int>& permutation(int g) const { return fwd_[g - 1]; }

  bool operator==(const CosetTable& o) const {
    return ngens_ == o.ngens_ && fwd_ == o.fwd_;
  }

 private:
  int ngens_ = 0;
  std::vector<std::vector<int>> fwd_, bwd_;
};

inline constexpr std::size_t kDefaultCosetCap = 1'000'000;

/// Kernel-of-PHom table: cosets are the vectors of F_p^rank in
/// lexicographic order (coset 0 the zero vector) and generator g
/// translates by its image.  Throws ResourceLimitError when p^rank
/// exceeds the cap.
CosetTable table_from_phom(const Presentation& p, const PHom& h,
                           std::size_t coset_cap = kDefaultCosetCap);

/// HLT coset enumeration over the subgroup generated by the given
/// words, with relator-based scanning, union-find coincidence handling
/// and a deduction-only lookahead pass once the table passes 75% of the
/// cap.  The result is standardized.  Throws ResourceLimitError if the
/// enumeration would exceed `cap` live cosets (the index may be
/// infinite or just larger than the cap).
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_gens,
                        std::size_t cap = kDefaultCosetCap);

/// Applies the letters of w left to right.
int trace(const CosetTable& t, int start, const Word& w);

/// BFS renumbering from coset 0, visiting g, g^-1 in declaration order.
/// Two tables are isomorphic as based permutation representations iff
/// their standardized forms are equal.
CosetTable standardize(const CosetTable& t);

/// Checks the four table invariants: generator actions are bijections,
/// every relator acts trivially, the action is transitive, and every
/// subgroup generator fixes coset 0.
bool is_valid_table(const Presentation& p, const CosetTable& t,
                    const std::vector<Word>& subgroup_gens);

}  // namespace homotower

#endif
