#include "homotower/tower.hpp"

#include <array>
#include <stdexcept>

#include "homotower/abelian.hpp"
#include "homotower/errors.hpp"
#include "homotower/exactlinalg.hpp"

namespace homotower {

namespace {

// Betti number with the cheap certificate first: full column rank of
// the relation matrix mod some auxiliary prime q forces betti 0 (rank
// can only drop under reduction); otherwise fall back to the exact
// Smith normal form.
std::pair<std::size_t, std::string> betti_with_method(const Presentation& p,
                                                      std::uint32_t prime) {
  IntMatrix m = relation_matrix(p);
  for (std::uint32_t q : std::array<std::uint32_t, 3>{5, 7, 11}) {
    if (q == prime) continue;
    if (betti_lower_bound_check(m, q))
      return {0, "rank mod " + std::to_string(q)};
  }
  return {abelian_invariants(p).betti, "smith normal form"};
}

std::uint64_t pow_u64(std::uint32_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

LevelCertificate certify(const Presentation& kernel, std::uint32_t prime,
                         std::size_t ngens_raw, std::size_t nrelators_raw,
                         std::uint64_t index_in_parent) {
  LevelCertificate cert;
  cert.index_in_parent = index_in_parent;
  cert.index_in_root = index_in_parent;
  cert.ngens_raw = ngens_raw;
  cert.nrelators_raw = nrelators_raw;
  cert.ngens = kernel.names.size();
  cert.nrelators = kernel.relators.size();
  cert.h1_fp_rank = elementary_abelian_quotient(kernel, prime).rank;
  auto [betti, method] = betti_with_method(kernel, prime);
  cert.betti = betti;
  cert.betti_method = method;
  ExpPCertificate e = certify_expp_elementary(kernel, prime);
  cert.expp_elementary = e.elementary;
  cert.expp_rank = static_cast<std::size_t>(e.rank);
  cert.expp_unconditional = e.unconditional;
  return cert;
}

}  // namespace

DescendResult descend_once(const Presentation& p, std::uint32_t prime,
                           const TowerCaps& caps) {
  PHom h = elementary_abelian_quotient(p, prime);
  if (h.rank == 0) {
    DescendResult res{p, certify(p, prime, p.names.size(),
                                 p.relators.size(), 1)};
    res.cert.level = 1;
    return res;
  }
  CosetTable t = table_from_phom(p, h, caps.coset_cap);
  RewriteResult rr = rewrite_subgroup_presentation(p, t);
  Presentation kernel = tietze_simplify(rr.pres, caps.tietze_budget);
  if (kernel.names.size() > static_cast<std::size_t>(caps.gen_cap))
    throw ResourceLimitError("simplified kernel has " +
                             std::to_string(kernel.names.size()) +
                             " generators, above the cap of " +
                             std::to_string(caps.gen_cap));
  DescendResult res{std::move(kernel), {}};
  res.cert = certify(res.kernel, prime, rr.generators.size(),
                     rr.raw_nrelators, pow_u64(prime, h.rank));
  res.cert.level = 1;
  return res;
}

Prop1Evidence check_prop1_hypothesis(const Presentation& p,
                                     std::uint32_t prime) {
  Prop1Evidence ev;
  ev.baer = class2_expp_quotient(p, prime);
  ev.modp_rank = static_cast<std::size_t>(ev.baer.dim_linear);
  ev.hypothesis = ev.baer.elementary_abelian && ev.baer.dim_linear == 3;
  return ev;
}

TowerReport descend(const Presentation& p, std::uint32_t prime, int depth,
                    const TowerCaps& caps) {
  if (depth < 1) throw std::invalid_argument("descent depth must be >= 1");
  TowerReport report;
  report.p = prime;
  report.root_fingerprint = fnv1a64_hex(print_presentation(p));
  report.root_ngens = p.names.size();
  report.root_nrelators = p.relators.size();
  report.evidence = check_prop1_hypothesis(p, prime);
  report.prop1_hypothesis = report.evidence.hypothesis;

  int effective = depth;
  if (effective > caps.depth_cap) {
    effective = caps.depth_cap;
    report.truncated = true;
    report.truncated_reason = "depth capped at " + std::to_string(caps.depth_cap);
  }

  Presentation current = p;
  std::uint64_t index_in_root = 1;
  for (int level = 1; level <= effective; ++level) {
    DescendResult dr;
    try {
      dr = descend_once(current, prime, caps);
    } catch (const ResourceLimitError& e) {
      report.truncated = true;
      report.truncated_reason = e.what();
      break;
    }
    dr.cert.level = level;
    index_in_root *= dr.cert.index_in_parent;
    dr.cert.index_in_root = index_in_root;
    if (report.prop1_hypothesis &&
        (dr.cert.betti != 0 || dr.cert.h1_fp_rank > 3)) {
      throw TheoremContradictionError(
          "level " + std::to_string(level) +
          " violates the powerful-towers proposition (betti = " +
          std::to_string(dr.cert.betti) +
          ", h1_fp_rank = " + std::to_string(dr.cert.h1_fp_rank) +
          "); this indicates an implementation bug");
    }
    report.levels.push_back(dr.cert);
    current = std::move(dr.kernel);
  }
  return report;
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace homotower
