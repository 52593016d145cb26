#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "homotower/abelian.hpp"
#include "homotower/baerq.hpp"
#include "homotower/exactlinalg.hpp"
#include "homotower/fixtures.hpp"

using namespace homotower;

namespace {

std::vector<BaerElement> basis_images(std::uint32_t p, int n) {
  std::vector<BaerElement> images;
  for (int k = 1; k <= n; ++k) images.push_back(baer_generator(p, n, k));
  return images;
}

BaerElement random_element(testgen::Rng& rng, std::uint32_t p, int n) {
  BaerElement e = baer_identity(p, n);
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  for (auto& x : e.v) x = d(rng);
  for (auto& x : e.w) x = d(rng);
  return e;
}

bool equal(const BaerElement& a, const BaerElement& b) {
  return a.p == b.p && a.v == b.v && a.w == b.w;
}

// Reference computation of the quotient report, materializing the full
// V + Lambda^2 V ideal from its definition.  Only fit for small n; the
// production routine must agree with it exactly.
BaerQuotientReport naive_class2(const Presentation& pres, std::uint32_t p) {
  const int n = pres.ngens();
  const std::size_t lam =
      static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t dim = static_cast<std::size_t>(n) + lam;
  auto images = basis_images(p, n);

  FpSpan ideal(p, dim);
  FpSpan linear(p, static_cast<std::size_t>(n));
  std::vector<std::vector<std::uint32_t>> vparts;
  for (const Word& r : pres.relators) {
    BaerElement e = baer_eval(r, images);
    std::vector<std::uint32_t> row = e.v;
    row.insert(row.end(), e.w.begin(), e.w.end());
    ideal.insert(std::move(row));
    linear.insert(e.v);
    vparts.push_back(e.v);
  }
  for (const auto& v : vparts)
    for (int j = 0; j < n; ++j) {
      std::vector<std::uint32_t> row(dim, 0);
      for (int t = 0; t < n; ++t) {
        if (t == j) continue;
        std::size_t idx = static_cast<std::size_t>(n) +
                          wedge_index(n, std::min(t, j), std::max(t, j));
        row[idx] = t < j ? v[t] : (p - v[t]) % p;
      }
      ideal.insert(std::move(row));
    }

  BaerQuotientReport rep;
  rep.p = p;
  rep.n = n;
  rep.dim_total = static_cast<int>(dim - ideal.dim());
  rep.dim_linear = static_cast<int>(static_cast<std::size_t>(n) - linear.dim());
  rep.elementary_abelian = rep.dim_total == rep.dim_linear;
  return rep;
}

}  // namespace

TEST_SUITE_BEGIN("baerq");

TEST_CASE("wedge coordinates are ordered lexicographically") {
  CHECK(wedge_index(4, 0, 1) == 0);
  CHECK(wedge_index(4, 0, 2) == 1);
  CHECK(wedge_index(4, 0, 3) == 2);
  CHECK(wedge_index(4, 1, 2) == 3);
  CHECK(wedge_index(4, 1, 3) == 4);
  CHECK(wedge_index(4, 2, 3) == 5);
  CHECK_THROWS_AS(wedge_index(4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(wedge_index(4, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(wedge_index(4, 0, 4), std::invalid_argument);
}

TEST_CASE("constructors validate the prime") {
  CHECK_THROWS_AS(baer_identity(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(baer_identity(4, 3), std::invalid_argument);
  BaerElement e = baer_generator(3, 4, 2);
  CHECK(e.v == std::vector<std::uint32_t>{0, 1, 0, 0});
  CHECK(e.w.size() == 6);
}

TEST_CASE("group axioms and the exponent-p law on random elements") {
  for (std::uint32_t p : {3u, 5u}) {
    testgen::Rng rng(77000 + p);
    const int n = 4;
    BaerElement id = baer_identity(p, n);
    for (int i = 0; i < 2500; ++i) {
      BaerElement a = random_element(rng, p, n);
      BaerElement b = random_element(rng, p, n);
      BaerElement c = random_element(rng, p, n);
      CHECK(equal(baer_mul(baer_mul(a, b), c), baer_mul(a, baer_mul(b, c))));
      CHECK(equal(baer_mul(a, id), a));
      CHECK(equal(baer_mul(id, a), a));
      CHECK(equal(baer_mul(a, baer_inv(a)), id));
      BaerElement power = id;
      for (std::uint32_t k = 0; k < p; ++k) power = baer_mul(power, a);
      CHECK(equal(power, id));
    }
  }
}

TEST_CASE("evaluation is compatible with abelianization") {
  SUBCASE("a commutator of basis elements is a pure wedge") {
    BaerElement e = baer_eval(Word({-1, -2, 1, 2}), basis_images(3, 2));
    CHECK(e.v == std::vector<std::uint32_t>{0, 0});
    CHECK(e.w == std::vector<std::uint32_t>{1});
  }

  SUBCASE("cubes vanish at p = 3") {
    testgen::Rng rng(77003);
    for (int i = 0; i < 200; ++i) {
      Word w = testgen::random_word(rng, 3, 10);
      Word cube = concat(concat(w, w), w);
      BaerElement e = baer_eval(cube, basis_images(3, 3));
      CHECK(equal(e, baer_identity(3, 3)));
    }
  }

  SUBCASE("the linear part is the mod-p exponent vector") {
    for (std::uint32_t p : {3u, 5u}) {
      testgen::Rng rng(77004 + p);
      for (int i = 0; i < 500; ++i) {
        Word w = testgen::random_word(rng, 5, 14);
        BaerElement e = baer_eval(w, basis_images(p, 5));
        auto ev = exponent_vector(w, 5);
        for (int g = 0; g < 5; ++g)
          CHECK(e.v[g] == static_cast<std::uint32_t>(((ev[g] % p) + p) % p));
      }
    }
  }

  SUBCASE("mismatched images are rejected") {
    std::vector<BaerElement> bad = {baer_generator(3, 2, 1),
                                    baer_generator(3, 3, 1)};
    CHECK_THROWS_AS(baer_eval(Word({1}), bad), std::invalid_argument);
    CHECK_THROWS_AS(baer_eval(Word({1, 2, 3}), basis_images(3, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("quotient reports on fixed presentations") {
  SUBCASE("free objects have dimension n + C(n,2)") {
    for (int n = 0; n <= 6; ++n) {
      Presentation free_n = make_presentation(testgen::letter_names(n), {});
      BaerQuotientReport rep = class2_expp_quotient(free_n, 3);
      CHECK(rep.dim_total == n + n * (n - 1) / 2);
      CHECK(rep.dim_linear == n);
      CHECK(rep.elementary_abelian == (n <= 1));
    }
  }

  SUBCASE("one relator collapses the cyclic case") {
    Presentation c3 = make_presentation({"a"}, {Word({1, 1, 1})});
    BaerQuotientReport rep = class2_expp_quotient(c3, 3);
    CHECK(rep.dim_total == 1);
    CHECK(rep.elementary_abelian);
  }

  SUBCASE("an abelian pair certifies immediately") {
    Presentation p = make_presentation({"a", "b"}, {Word({-1, -2, 1, 2})});
    ExpPCertificate cert = certify_expp_elementary(p, 3);
    CHECK(cert.elementary);
    CHECK(cert.rank == 2);
    CHECK(cert.unconditional);
  }

  SUBCASE("the root group and its kernel") {
    BaerQuotientReport g1 = class2_expp_quotient(fixture("gamma1"), 3);
    CHECK(g1.dim_linear == 2);
    CHECK(g1.dim_total == 3);
    CHECK_FALSE(g1.elementary_abelian);

    BaerQuotientReport g2 = class2_expp_quotient(fixture("gamma2"), 3);
    CHECK(g2.dim_linear == 3);
    CHECK(g2.dim_total == 3);
    CHECK(g2.elementary_abelian);

    ExpPCertificate cert = certify_expp_elementary(fixture("gamma2"), 3);
    CHECK(cert.elementary);
    CHECK(cert.rank == 3);
    CHECK(cert.unconditional);
    // At p = 5 only the class-2 statement is certified.
    CHECK_FALSE(certify_expp_elementary(fixture("gamma2"), 5).unconditional);
  }
}

TEST_CASE("quotient computation agrees with the reference construction") {
  testgen::Rng rng(77005);
  std::vector<Presentation> corpus = {fixture("gamma1"), fixture("gamma2")};
  for (int i = 0; i < 120; ++i)
    corpus.push_back(testgen::random_presentation(rng));
  for (const Presentation& p : corpus)
    for (std::uint32_t q : {3u, 5u}) {
      BaerQuotientReport fast = class2_expp_quotient(p, q);
      BaerQuotientReport slow = naive_class2(p, q);
      CHECK(fast.dim_total == slow.dim_total);
      CHECK(fast.dim_linear == slow.dim_linear);
      CHECK(fast.elementary_abelian == slow.elementary_abelian);
      CHECK(fast.dim_linear ==
            static_cast<int>(elementary_abelian_quotient(p, q).rank));
    }
}

TEST_CASE("adding a relator never enlarges the quotient") {
  testgen::Rng rng(77006);
  for (int i = 0; i < 100; ++i) {
    Presentation p = testgen::random_presentation(rng);
    BaerQuotientReport before = class2_expp_quotient(p, 3);
    Presentation extended = p;
    extended.relators.push_back(testgen::random_word(rng, p.ngens(), 10));
    BaerQuotientReport after = class2_expp_quotient(extended, 3);
    CHECK(after.dim_total <= before.dim_total);
    CHECK(after.dim_linear <= before.dim_linear);
  }
}

TEST_SUITE_END();
