#ifndef HOMOTOWER_REWRITE_HPP
#define HOMOTOWER_REWRITE_HPP

#include <cstddef>
#include <vector>

#include "homotower/cosets.hpp"
#include "homotower/fpres.hpp"

namespace homotower {

/// Schreier transversal: one coset representative word per coset, with
/// rep 0 the identity.  Every prefix of a rep is itself a rep, and
/// trace(table, 0, reps[c]) = c.
struct Transversal {
  std::vector<Word> reps;
};

/// BFS-minimal transversal, visiting generators in declaration order
/// with the positive letter before its inverse.  Deterministic.
Transversal schreier_transversal(const CosetTable& t);

/// One subgroup generator per non-tree (coset, generator) edge:
/// the word reps[coset] * gen * reps[coset^gen]^-1.
struct SchreierGenerator {
  int coset;
  int gen;  // 1-based ambient generator
  Word word;
};

/// Coset-major, generator-minor; pairs whose word freely reduces to the
/// identity (the spanning-tree edges) are omitted, so a table of index
/// m over n generators yields exactly m*n - (m-1) entries.
std::vector<SchreierGenerator> schreier_generators(const CosetTable& t,
                                                   const Transversal& tr);

/// A subgroup presentation together with its bookkeeping: which
/// (coset, generator) pair each new generator came from, and the
/// structural relator count index * |relators| before empty rewrites
/// were dropped.
struct RewriteResult {
  Presentation pres;
  std::vector<SchreierGenerator> generators;
  std::size_t raw_nrelators;
};

/// Reidemeister-Schreier: presents the subgroup at coset 0.  Generators
/// are the Schreier generators (named x<coset>_<gen>); relators are the
/// rewrites of reps[c] * w * reps[c]^-1 into Schreier letters for every
/// relator w and coset c, emitted relator-major, coset-minor.
RewriteResult rewrite_subgroup_presentation(const Presentation& p,
                                            const CosetTable& t);

inline constexpr int kDefaultTietzeBudget = 100;

/// Bounded, conservative presentation simplification: per pass, free
/// and cyclic reduction of every relator, removal of empty and
/// duplicate relators (duplicate up to rotation and inversion), then
/// elimination of generators that occur exactly once (exponent +-1) in
/// some relator, by substitution.  Stops at a fixed point or after
/// `budget` passes.  The result presents an isomorphic group; surviving
/// generators keep their names.
Presentation tietze_simplify(const Presentation& p,
                             int budget = kDefaultTietzeBudget);

}  // namespace homotower

#endif
