#ifndef HOMOTOWER_TESTS_GENERATORS_HPP
#define HOMOTOWER_TESTS_GENERATORS_HPP

// Seeded random inputs shared by the property tests.  Everything takes
// the engine by reference so a test controls its own seed and stays
// reproducible.

#include <random>
#include <string>
#include <vector>

#include "homotower/exactlinalg.hpp"
#include "homotower/fpres.hpp"
#include "homotower/word.hpp"

namespace homotower::testgen {

using Rng = std::mt19937;

inline Letter random_letter(Rng& rng, int ngens) {
  std::uniform_int_distribution<int> d(1, ngens);
  Letter l = static_cast<Letter>(d(rng));
  return std::bernoulli_distribution(0.5)(rng) ? l : -l;
}

/// A word of at most `len` raw letters (free reduction may shorten it).
inline Word random_word(Rng& rng, int ngens, int len) {
  std::vector<Letter> raw;
  raw.reserve(len);
  for (int i = 0; i < len; ++i) raw.push_back(random_letter(rng, ngens));
  return Word(std::move(raw));
}

/// Generator names a, b, c, ... for small alphabets.
inline std::vector<std::string> letter_names(int ngens) {
  std::vector<std::string> names;
  for (int i = 0; i < ngens; ++i) names.push_back(std::string(1, 'a' + i));
  return names;
}

/// <= 4 generators, <= 6 relators, raw relator length <= 12: the corpus
/// shape the oracle-agreement and rewrite-soundness suites run on.
inline Presentation random_presentation(Rng& rng, int max_gens = 4,
                                        int max_relators = 6,
                                        int max_len = 12) {
  std::uniform_int_distribution<int> gens_d(1, max_gens);
  std::uniform_int_distribution<int> rel_d(0, max_relators);
  int ngens = gens_d(rng);
  int nrel = rel_d(rng);
  std::vector<Word> relators;
  std::uniform_int_distribution<int> len_d(1, max_len);
  for (int i = 0; i < nrel; ++i)
    relators.push_back(random_word(rng, ngens, len_d(rng)));
  return make_presentation(letter_names(ngens), std::move(relators));
}

inline IntMatrix random_matrix(Rng& rng, std::size_t max_dim = 8,
                               long long bound = 20) {
  std::uniform_int_distribution<std::size_t> dim_d(0, max_dim);
  std::uniform_int_distribution<long long> ent_d(-bound, bound);
  IntMatrix m(dim_d(rng), dim_d(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = ent_d(rng);
  return m;
}

/// p-th powers of all generators followed by all pairwise commutators:
/// the declared generating set for the kernel of a map onto an
/// elementary abelian p-group.
inline std::vector<Word> kernel_subgroup_words(int ngens, std::uint32_t p) {
  std::vector<Word> gens;
  for (int g = 1; g <= ngens; ++g) {
    std::vector<Letter> pw(p, static_cast<Letter>(g));
    gens.push_back(Word(std::move(pw)));
  }
  for (int i = 1; i <= ngens; ++i)
    for (int j = i + 1; j <= ngens; ++j)
      gens.push_back(Word({static_cast<Letter>(-i), static_cast<Letter>(-j),
                           static_cast<Letter>(i), static_cast<Letter>(j)}));
  return gens;
}

}  // namespace homotower::testgen

#endif
