#include "homotower/fixtures.hpp"

#include <stdexcept>

#include "homotower/tower.hpp"

namespace homotower {

namespace {

// Byte-identical to the published presentation block (and to
// data/gamma1.fp, which is checked by the test suite).
const std::string kGamma1Text =
    "Gamma1 := Group < a,b,c,d | a*b^{-1}*c^{-1}*b*a^{-1}*d*c*d^{-1},\n"
    "                     a*b*a^{-1}*d*c*d*a^{-2}*b*c,\n"
    "                     a*d*c*d*a^{-1}*b*d^{-2}*c^{-1}*b^{-1},\n"
    "                     c*d^2*c*d^2*c*d^2, c^3, a*c*b*c*a*b*d^{-2} >\n";

}  // namespace

const std::string& gamma1_text() { return kGamma1Text; }

Presentation fixture(const std::string& name) {
  if (name == "gamma1") return parse_presentation(kGamma1Text);
  if (name == "gamma2") {
    // Derived, not vendored: the kernel of gamma1's maximal elementary
    // abelian 3-quotient, simplified.  Computed once per process.
    static const Presentation gamma2 =
        descend_once(fixture("gamma1"), 3).kernel;
    return gamma2;
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() { return {"gamma1", "gamma2"}; }

}  // namespace homotower
