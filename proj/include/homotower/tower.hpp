#ifndef HOMOTOWER_TOWER_HPP
#define HOMOTOWER_TOWER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "homotower/baerq.hpp"
#include "homotower/cosets.hpp"
#include "homotower/fpres.hpp"
#include "homotower/rewrite.hpp"

namespace homotower {

/// Resource limits for a descent run.  gen_cap bounds the generator
/// count of a simplified kernel before the next level is attempted;
/// depth_cap bounds how many levels are computed regardless of the
/// requested depth.
struct TowerCaps {
  std::size_t coset_cap = kDefaultCosetCap;
  int gen_cap = 5000;
  int depth_cap = 3;
  int tietze_budget = kDefaultTietzeBudget;
};

/// Everything certified about one tower level (the group one step
/// further down).  Raw counts describe the Reidemeister-Schreier output
/// before simplification; ngens/nrelators the simplified presentation.
struct LevelCertificate {
  int level = 0;
  std::uint64_t index_in_parent = 1;
  std::uint64_t index_in_root = 1;
  std::size_t ngens_raw = 0;
  std::size_t nrelators_raw = 0;
  std::size_t ngens = 0;
  std::size_t nrelators = 0;
  std::size_t h1_fp_rank = 0;      // dim H^1(level group, F_p)
  std::size_t betti = 0;           // first Betti number
  std::string betti_method;        // "rank mod q" or "smith normal form"
  bool expp_elementary = false;    // exponent-p quotient elementary abelian
  std::size_t expp_rank = 0;
  bool expp_unconditional = false; // false = class-2 claim only (p > 3)
};

struct DescendResult {
  Presentation kernel;
  LevelCertificate cert;
};

/// One descent step: the kernel of the maximal elementary abelian
/// p-quotient, as a simplified presentation, plus its certificate.
/// A rank-0 quotient returns the group itself at index 1.  Throws
/// ResourceLimitError when the coset cap is exceeded.
DescendResult descend_once(const Presentation& p, std::uint32_t prime,
                           const TowerCaps& caps = {});

/// Hypothesis of the powerful-towers proposition: the class-2
/// exponent-p quotient certifies G/G^p isomorphic to (Z/pZ)^3.
struct Prop1Evidence {
  bool hypothesis = false;
  BaerQuotientReport baer{};
  std::size_t modp_rank = 0;
};

Prop1Evidence check_prop1_hypothesis(const Presentation& p, std::uint32_t prime);

struct TowerReport {
  std::uint32_t p = 3;
  std::string root_fingerprint;  // fnv1a64 of the printed root presentation
  std::size_t root_ngens = 0;
  std::size_t root_nrelators = 0;
  bool prop1_hypothesis = false;
  Prop1Evidence evidence;
  std::vector<LevelCertificate> levels;
  bool truncated = false;
  std::string truncated_reason;
};

/// Iterates descend_once up to `depth` levels (clipped by
/// caps.depth_cap), certifying each level.  Resource caps stop the
/// descent early and mark the report truncated instead of failing.
/// When the root satisfies the proposition hypothesis, every computed
/// level must report betti 0 and h1_fp_rank <= 3; a violation would
/// contradict the proved theorem and throws TheoremContradictionError.
TowerReport descend(const Presentation& p, std::uint32_t prime, int depth,
                    const TowerCaps& caps = {});

/// FNV-1a 64-bit hash, hex-encoded; used to fingerprint presentations.
std::string fnv1a64_hex(const std::string& data);

}  // namespace homotower

#endif
