#ifndef HOMOTOWER_REPORT_IO_HPP
#define HOMOTOWER_REPORT_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "homotower/abelian.hpp"
#include "homotower/baerq.hpp"
#include "homotower/fpres.hpp"
#include "homotower/tower.hpp"

namespace homotower {

/// BigInt as a JSON number when it fits in 64 bits, else as a decimal
/// string (certificates must survive archiving without precision loss).
nlohmann::json big_to_json(const BigInt& x);

struct AbelianizeReport {
  std::uint32_t p = 3;
  std::size_t ngens = 0;
  std::size_t nrelators = 0;
  AbelianInvariants inv;
  std::size_t modp_rank = 0;
};

struct KernelReport {
  std::uint32_t p = 3;
  Presentation kernel;
  LevelCertificate cert;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyCdReport {
  std::uint32_t p = 3;
  int depth = 2;
  bool exploratory = false;  // p != 3: ranks reported, no verdict claimed
  std::vector<CheckResult> checks;
  bool pass = false;
  TowerReport tower;
};

nlohmann::json to_json(const AbelianInvariants& inv);
nlohmann::json to_json(const BaerQuotientReport& rep);
nlohmann::json to_json(const Prop1Evidence& ev);
nlohmann::json to_json(const LevelCertificate& cert);
nlohmann::json to_json(const TowerReport& rep);
nlohmann::json to_json(const AbelianizeReport& rep);
nlohmann::json to_json(const KernelReport& rep);
nlohmann::json to_json(const VerifyCdReport& rep);

std::string to_text(const AbelianizeReport& rep);
std::string to_text(const LevelCertificate& cert);
std::string to_text(const KernelReport& rep);
std::string to_text(const TowerReport& rep);
std::string to_text(const VerifyCdReport& rep);

}  // namespace homotower

#endif
