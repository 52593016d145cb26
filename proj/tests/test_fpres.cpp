#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "homotower/errors.hpp"
#include "homotower/fixtures.hpp"
#include "homotower/fpres.hpp"

using namespace homotower;

TEST_SUITE_BEGIN("fpres");

TEST_CASE("make_presentation validates and normalizes") {
  Presentation p = make_presentation({"a", "b"}, {Word({1, -1}), Word({2})});
  CHECK(p.ngens() == 2);
  CHECK(p.relators.size() == 1);  // the empty relator was dropped

  CHECK_THROWS_AS(make_presentation({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_presentation({""}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_presentation({"1a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_presentation({"a"}, {Word({2})}),
                  std::invalid_argument);
}

TEST_CASE("parsing small presentations") {
  Presentation p = parse_presentation("< a | a >");
  CHECK(p.names == std::vector<std::string>{"a"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == Word({1}));

  Presentation q = parse_presentation("G := Group < a, b | a*b^-1, b^{2} >");
  CHECK(q.names == std::vector<std::string>{"a", "b"});
  REQUIRE(q.relators.size() == 2);
  CHECK(q.relators[0] == Word({1, -2}));
  CHECK(q.relators[1] == Word({2, 2}));

  Presentation free2 = parse_presentation("< a, b | >");
  CHECK(free2.ngens() == 2);
  CHECK(free2.relators.empty());

  // Both exponent spellings are accepted.
  CHECK(parse_presentation("< b | b^-1*b^-1 >") ==
        parse_presentation("< b | b^{-1}*b^{-1} >"));
}

TEST_CASE("parse errors carry 1-based positions") {
  CHECK_THROWS_AS(parse_presentation("< a, b | a*b^{-1 >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | b >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a, a | >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a^x >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a^1000001 >"), ParseError);

  try {
    parse_presentation("< a,\n  b | a*\nc >");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.col() == 1);
  }
}

TEST_CASE("printing uses the grammar the parser accepts") {
  Presentation p = make_presentation({"a"}, {Word({1})});
  CHECK(print_presentation(p) == "< a | a >");

  Presentation c3 = make_presentation({"c"}, {Word({1, 1, 1})});
  CHECK(print_presentation(c3) == "< c | c^3 >");

  Presentation inv = make_presentation({"a", "b"}, {Word({-1, -1, 2})});
  CHECK(print_presentation(inv) == "< a, b | a^-2*b >");
}

TEST_CASE("the published presentation parses to 4 generators, 6 relators") {
  Presentation g1 = parse_presentation(gamma1_text());
  CHECK(g1.names == std::vector<std::string>{"a", "b", "c", "d"});
  REQUIRE(g1.relators.size() == 6);
  std::vector<std::size_t> lengths;
  for (const Word& r : g1.relators) lengths.push_back(r.size());
  CHECK(lengths == std::vector<std::size_t>{8, 10, 10, 9, 3, 8});
  CHECK(g1.relators[4] == Word({3, 3, 3}));
  CHECK(g1 == fixture("gamma1"));

  // Round trip through the printer is a structural fixed point.
  CHECK(parse_presentation(print_presentation(g1)) == g1);
}

TEST_CASE("round trip on random presentations") {
  testgen::Rng rng(72001);
  for (int i = 0; i < 300; ++i) {
    Presentation p = testgen::random_presentation(rng);
    CHECK(parse_presentation(print_presentation(p)) == p);
  }
}

TEST_SUITE_END();
