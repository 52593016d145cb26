#ifndef HOMOTOWER_FPRES_HPP
#define HOMOTOWER_FPRES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "homotower/word.hpp"

namespace homotower {

/// A finite presentation: named generators and freely reduced relators.
/// Relators that reduce to the identity are dropped on construction.
struct Presentation {
  std::vector<std::string> names;
  std::vector<Word> relators;

  int ngens() const { return static_cast<int>(names.size()); }

  bool operator==(const Presentation&) const = default;
};

/// Validating constructor: checks name syntax and distinctness, reduces
/// relators, drops empty ones, rejects out-of-range letters.
Presentation make_presentation(std::vector<std::string> names,
                               std::vector<Word> relators);

/// Parses the Magma-style fragment
///
///   [Name :=] [Group] < g1, g2, ... | w1, w2, ... >
///
/// where a word is a '*'-separated product of factors g or g^e, the
/// exponent written with or without braces (b^-1 and b^{-1} both work).
/// Whitespace and newlines are insignificant.  Throws ParseError with a
/// 1-based line/column on bad input.
Presentation parse_presentation(std::string_view text);

/// Inverse of the parser up to formatting: one line, braces never used,
/// letter runs collapsed to powers.  parse(print(P)) == P.
std::string print_presentation(const Presentation& p);

/// Exponents larger than this are rejected by the parser to bound the
/// expansion of powers into letter runs.
inline constexpr long kMaxExponentMagnitude = 1'000'000;

}  // namespace homotower

#endif
