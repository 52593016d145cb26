#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "homotower/word.hpp"

using namespace homotower;

TEST_SUITE_BEGIN("word");

TEST_CASE("free reduction of letter sequences") {
  CHECK(free_reduce({1, -1}).empty());
  CHECK(free_reduce({1, 2, -2, 1}) == Word({1, 1}));
  // a b^-1 c^-1 b a^-1 d c d^-1: already reduced.
  std::vector<Letter> rel = {1, -2, -3, 2, -1, 4, 3, -4};
  CHECK(free_reduce(rel).letters() == rel);
  // Nested cancellation collapses fully.
  CHECK(free_reduce({1, 2, 3, -3, -2, -1}).empty());
}

TEST_CASE("word constructor reduces eagerly and rejects zero") {
  CHECK(Word({2, -2}).empty());
  CHECK_THROWS_AS(Word({1, 0, 2}), std::invalid_argument);
  CHECK(Word().empty());
  CHECK(Word({1, 2}).max_letter() == 2);
  CHECK(Word().max_letter() == 0);
}

TEST_CASE("cyclic reduction splits off the conjugator") {
  auto [core1, conj1] = cyclic_reduce(Word({1, 2, -1}));
  CHECK(core1 == Word({2}));
  CHECK(conj1 == Word({1}));

  auto [core2, conj2] = cyclic_reduce(Word({3, 3, 3}));
  CHECK(core2 == Word({3, 3, 3}));
  CHECK(conj2.empty());

  auto [core3, conj3] = cyclic_reduce(Word({-1, 4, 3, 1}));
  CHECK(core3 == Word({4, 3}));
  CHECK(conj3 == Word({-1}));
}

TEST_CASE("cyclic reduction reassembles the original word") {
  testgen::Rng rng(71001);
  for (int i = 0; i < 500; ++i) {
    Word w = testgen::random_word(rng, 4, 16);
    auto [core, conj] = cyclic_reduce(w);
    CHECK(conjugate(conj, core) == w);
    // The core really is cyclically reduced: first and last letters are
    // not inverse to each other.
    if (core.size() >= 2)
      CHECK(core.letters().front() != -core.letters().back());
  }
}

TEST_CASE("invert and concat basics") {
  CHECK(invert(Word({1, 2})) == Word({-2, -1}));
  CHECK(concat(Word({1}), Word({-1})).empty());
  CHECK(concat(Word({1, 2}), Word({-2, 3})) == Word({1, 3}));
}

TEST_CASE("concat with the inverse cancels completely") {
  testgen::Rng rng(71002);
  for (int i = 0; i < 500; ++i) {
    Word w = testgen::random_word(rng, 4, 20);
    CHECK(concat(w, invert(w)).empty());
    CHECK(concat(invert(w), w).empty());
  }
}

TEST_CASE("exponent vector on fixed relators") {
  CHECK(exponent_vector(Word(), 4) == std::vector<std::int64_t>{0, 0, 0, 0});
  // a b a^-1 d c d a^-2 b c
  Word r2({1, 2, -1, 4, 3, 4, -1, -1, 2, 3});
  CHECK(exponent_vector(r2, 4) == std::vector<std::int64_t>{-2, 2, 2, 2});
  // c d^2 c d^2 c d^2
  Word r4({3, 4, 4, 3, 4, 4, 3, 4, 4});
  CHECK(exponent_vector(r4, 4) == std::vector<std::int64_t>{0, 0, 3, 6});
}

TEST_CASE("free reduction is idempotent and parity-preserving") {
  testgen::Rng rng(71003);
  std::uniform_int_distribution<int> len_d(0, 24);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Letter> raw;
    int len = len_d(rng);
    for (int j = 0; j < len; ++j) raw.push_back(testgen::random_letter(rng, 3));
    Word once = free_reduce(raw);
    CHECK(free_reduce(once.letters()) == once);
    CHECK(once.size() % 2 == raw.size() % 2);
    CHECK(once.size() <= raw.size());
  }
}

TEST_CASE("exponent vector is additive under concat, negated by invert") {
  testgen::Rng rng(71004);
  for (int i = 0; i < 500; ++i) {
    Word u = testgen::random_word(rng, 4, 12);
    Word v = testgen::random_word(rng, 4, 12);
    auto eu = exponent_vector(u, 4);
    auto ev = exponent_vector(v, 4);
    auto euv = exponent_vector(concat(u, v), 4);
    auto einv = exponent_vector(invert(u), 4);
    for (int k = 0; k < 4; ++k) {
      CHECK(euv[k] == eu[k] + ev[k]);
      CHECK(einv[k] == -eu[k]);
    }
  }
}

TEST_SUITE_END();
