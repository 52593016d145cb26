#ifndef HOMOTOWER_WORD_HPP
#define HOMOTOWER_WORD_HPP

#include <cstdint>
#include <vector>

namespace homotower {

/// A letter in a free group word: +k is generator k, -k its inverse,
/// generators numbered from 1.  Zero is never a valid letter.
using Letter = std::int32_t;

/// A freely reduced word over a numbered alphabet.  All constructors
/// reduce eagerly, so a Word is reduced by construction and stays that
/// way; the empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Reduces `raw`.  Throws std::invalid_argument on a zero letter.
  explicit Word(std::vector<Letter> raw);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const Word&) const = default;

  /// Largest |letter| appearing, 0 for the identity.
  int max_letter() const;

 private:
  std::vector<Letter> letters_;
};

/// Reduced form of an arbitrary letter sequence.
Word free_reduce(const std::vector<Letter>& raw);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w = conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);

/// Conjugate u * w * u^-1, reduced.
Word conjugate(const Word& u, const Word& w);

/// Signed letter counts: entry k-1 is the exponent sum of generator k.
/// Every |letter| of w must be <= n.
std::vector<std::int64_t> exponent_vector(const Word& w, int n);

}  // namespace homotower

#endif
