#ifndef HOMOTOWER_FIXTURES_HPP
#define HOMOTOWER_FIXTURES_HPP

#include <string>
#include <vector>

#include "homotower/fpres.hpp"

namespace homotower {

/// Builtin presentations addressable by name:
///   gamma1 - the Calegari-Dunfield group;
///   gamma2 - the kernel of gamma1's maximal elementary abelian
///            3-quotient, derived in-process (never hand-edited).
/// Throws std::invalid_argument for unknown names.
Presentation fixture(const std::string& name);

/// The source text of the gamma1 fixture, byte-identical to
/// data/gamma1.fp.
const std::string& gamma1_text();

std::vector<std::string> fixture_names();

}  // namespace homotower

#endif
