#include "homotower/report_io.hpp"

#include <limits>
#include <sstream>

namespace homotower {

using nlohmann::json;

json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

json to_json(const AbelianInvariants& inv) {
  json torsion = json::array();
  for (const BigInt& t : inv.torsion) torsion.push_back(big_to_json(t));
  return {{"betti", inv.betti}, {"torsion", torsion}};
}

json to_json(const BaerQuotientReport& rep) {
  return {{"p", rep.p},
          {"ngens", rep.n},
          {"dim_total", rep.dim_total},
          {"dim_linear", rep.dim_linear},
          {"elementary_abelian", rep.elementary_abelian}};
}

json to_json(const Prop1Evidence& ev) {
  return {{"hypothesis", ev.hypothesis},
          {"baer", to_json(ev.baer)},
          {"modp_rank", ev.modp_rank}};
}

json to_json(const LevelCertificate& cert) {
  return {{"level", cert.level},
          {"index_in_parent", cert.index_in_parent},
          {"index_in_root", cert.index_in_root},
          {"ngens_raw", cert.ngens_raw},
          {"nrelators_raw", cert.nrelators_raw},
          {"ngens", cert.ngens},
          {"nrelators", cert.nrelators},
          {"h1_fp_rank", cert.h1_fp_rank},
          {"betti", cert.betti},
          {"betti_method", cert.betti_method},
          {"expp_elementary", cert.expp_elementary},
          {"expp_rank", cert.expp_rank},
          {"expp_unconditional", cert.expp_unconditional}};
}

json to_json(const TowerReport& rep) {
  json levels = json::array();
  for (const LevelCertificate& c : rep.levels) levels.push_back(to_json(c));
  return {{"prime", rep.p},
          {"root_fingerprint", rep.root_fingerprint},
          {"root_ngens", rep.root_ngens},
          {"root_nrelators", rep.root_nrelators},
          {"prop1_hypothesis", rep.prop1_hypothesis},
          {"evidence", to_json(rep.evidence)},
          {"levels", levels},
          {"truncated", rep.truncated},
          {"truncated_reason", rep.truncated_reason}};
}

json to_json(const AbelianizeReport& rep) {
  json j = to_json(rep.inv);
  j["prime"] = rep.p;
  j["ngens"] = rep.ngens;
  j["nrelators"] = rep.nrelators;
  j["modp_rank"] = rep.modp_rank;
  return j;
}

json to_json(const KernelReport& rep) {
  return {{"prime", rep.p},
          {"presentation", print_presentation(rep.kernel)},
          {"certificate", to_json(rep.cert)}};
}

json to_json(const VerifyCdReport& rep) {
  json checks = json::array();
  for (const CheckResult& c : rep.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"prime", rep.p},
          {"depth", rep.depth},
          {"exploratory", rep.exploratory},
          {"checks", checks},
          {"verdict", rep.exploratory ? "exploratory"
                                      : (rep.pass ? "pass" : "fail")},
          {"tower", to_json(rep.tower)}};
}

namespace {

std::string torsion_line(const std::vector<BigInt>& torsion) {
  if (torsion.empty()) return "(none)";
  std::ostringstream os;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) os << ", ";
    os << torsion[i];
  }
  return os.str();
}

}  // namespace

std::string to_text(const AbelianizeReport& rep) {
  std::ostringstream os;
  os << "presentation: " << rep.ngens << " generators, " << rep.nrelators
     << " relators\n"
     << "betti: " << rep.inv.betti << "\n"
     << "torsion: " << torsion_line(rep.inv.torsion) << "\n"
     << "mod-" << rep.p << " quotient rank: " << rep.modp_rank << "\n";
  return os.str();
}

std::string to_text(const LevelCertificate& cert) {
  std::ostringstream os;
  os << "level " << cert.level << ":\n"
     << "  index in parent: " << cert.index_in_parent << "\n"
     << "  index in root: " << cert.index_in_root << "\n"
     << "  rewritten presentation: " << cert.ngens_raw << " generators, "
     << cert.nrelators_raw << " relators\n"
     << "  simplified presentation: " << cert.ngens << " generators, "
     << cert.nrelators << " relators\n"
     << "  h1 rank mod p: " << cert.h1_fp_rank << "\n"
     << "  betti: " << cert.betti << " (" << cert.betti_method << ")\n"
     << "  exponent-p quotient elementary abelian: "
     << (cert.expp_elementary ? "yes" : "no") << " (rank " << cert.expp_rank
     << (cert.expp_unconditional ? "" : "; class-2 claim only") << ")\n";
  return os.str();
}

std::string to_text(const KernelReport& rep) {
  std::ostringstream os;
  os << "kernel of the maximal elementary abelian " << rep.p
     << "-quotient:\n"
     << print_presentation(rep.kernel) << "\n"
     << to_text(rep.cert);
  return os.str();
}

std::string to_text(const TowerReport& rep) {
  std::ostringstream os;
  os << "p-descent tower, p = " << rep.p << "\n"
     << "root: " << rep.root_ngens << " generators, " << rep.root_nrelators
     << " relators, fingerprint " << rep.root_fingerprint << "\n"
     << "prop1 hypothesis (exponent-p quotient elementary abelian of rank 3): "
     << (rep.prop1_hypothesis ? "yes" : "no") << " (mod-p rank "
     << rep.evidence.modp_rank << ", class-2 dim "
     << rep.evidence.baer.dim_total << ")\n";
  for (const LevelCertificate& c : rep.levels) os << to_text(c);
  if (rep.truncated) os << "truncated: " << rep.truncated_reason << "\n";
  return os.str();
}

std::string to_text(const VerifyCdReport& rep) {
  std::ostringstream os;
  if (rep.exploratory) {
    os << "exploratory run at p = " << rep.p
       << ": ranks reported, no claim checked\n"
       << to_text(rep.tower);
    return os.str();
  }
  for (const CheckResult& c : rep.checks)
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " (" << c.detail
       << ")\n";
  os << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
  os << to_text(rep.tower);
  return os.str();
}

}  // namespace homotower
