#include "homotower/word.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace homotower {

namespace {

std::vector<Letter> reduce_letters(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw std::invalid_argument("malformed letter: zero index");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> raw) : letters_(reduce_letters(raw)) {}

int Word::max_letter() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, std::abs(l));
  return m;
}

Word free_reduce(const std::vector<Letter>& raw) { return Word(raw); }

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  std::vector<Letter> conj;
  while (hi > lo + 1 && ls[lo] == -ls[hi - 1]) {
    conj.push_back(ls[lo]);
    ++lo;
    --hi;
  }
  return CyclicReduction{Word(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi)),
                         Word(std::move(conj))};
}

Word invert(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l = -l;
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(out));
}

Word conjugate(const Word& u, const Word& w) {
  return concat(concat(u, w), invert(u));
}

std::vector<std::int64_t> exponent_vector(const Word& w, int n) {
  assert(w.max_letter() <= n);
  std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
  for (Letter l : w.letters()) {
    if (l > 0)
      ++e[static_cast<std::size_t>(l) - 1];
    else
      --e[static_cast<std::size_t>(-l) - 1];
  }
  return e;
}

}  // namespace homotower
