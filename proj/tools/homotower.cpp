// homotower: certificates for p-descent towers of finitely presented
// groups, including the Calegari-Dunfield rational-homology-sphere
// verification (the verify-cd command).
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 resource cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "homotower/abelian.hpp"
#include "homotower/errors.hpp"
#include "homotower/exactlinalg.hpp"
#include "homotower/fixtures.hpp"
#include "homotower/fpres.hpp"
#include "homotower/report_io.hpp"
#include "homotower/tower.hpp"

namespace {

using namespace homotower;

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string fixture_name = "gamma1";
  std::uint32_t prime = 3;
  int depth = 2;
  std::string format = "text";
  std::string out_path;
  std::size_t coset_cap = kDefaultCosetCap;
  int gen_cap = 5000;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg, bool with_input) {
  if (with_input) {
    auto* input = cmd->add_option("--input", cfg.input_path,
                                  "Presentation file in the .fp grammar");
    cmd->add_option("--fixture", cfg.fixture_name,
                    "Builtin fixture name (gamma1, gamma2)")
        ->excludes(input);
  }
  cmd->add_option("--prime", cfg.prime, "Odd prime p (default 3)");
  cmd->add_option("--depth", cfg.depth, "Descent depth (default 2)");
  cmd->add_option("--format", cfg.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", cfg.out_path, "Write the report to this path");
  cmd->add_option("--coset-cap", cfg.coset_cap,
                  "Max cosets per enumeration (default 1000000)");
  cmd->add_option("--gen-cap", cfg.gen_cap,
                  "Max generators in a simplified kernel before the "
                  "descent stops (default 5000)");
}

Presentation load_input(const RunConfig& cfg) {
  if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw std::invalid_argument("cannot open " + cfg.input_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
  }
  return fixture(cfg.fixture_name);
}

void validate(const RunConfig& cfg) {
  if (cfg.prime < 3 || !is_prime(cfg.prime))
    throw std::invalid_argument("--prime must be an odd prime");
  if (cfg.depth < 1) throw std::invalid_argument("--depth must be >= 1");
  if (cfg.coset_cap == 0 || cfg.gen_cap < 1)
    throw std::invalid_argument("caps must be positive");
}

TowerCaps caps_of(const RunConfig& cfg) {
  TowerCaps caps;
  caps.coset_cap = cfg.coset_cap;
  caps.gen_cap = cfg.gen_cap;
  return caps;
}

int emit(const RunConfig& cfg, const std::string& text,
         const nlohmann::json& body, const std::string& command) {
  std::string payload;
  if (cfg.format == "json") {
    nlohmann::json doc = body;
    doc["schema"] = 1;
    doc["command"] = command;
    payload = doc.dump(2) + "\n";
  } else {
    payload = text;
  }
  if (cfg.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) throw std::invalid_argument("cannot write " + cfg.out_path);
    out << payload;
  }
  return 0;
}

int cmd_abelianize(const RunConfig& cfg) {
  Presentation p = load_input(cfg);
  AbelianizeReport rep;
  rep.p = cfg.prime;
  rep.ngens = p.names.size();
  rep.nrelators = p.relators.size();
  rep.inv = abelian_invariants(p);
  rep.modp_rank = elementary_abelian_quotient(p, cfg.prime).rank;
  return emit(cfg, to_text(rep), to_json(rep), "abelianize");
}

int cmd_kernel(const RunConfig& cfg) {
  Presentation p = load_input(cfg);
  DescendResult dr = descend_once(p, cfg.prime, caps_of(cfg));
  KernelReport rep{cfg.prime, dr.kernel, dr.cert};
  return emit(cfg, to_text(rep), to_json(rep), "kernel");
}

int cmd_tower(const RunConfig& cfg) {
  Presentation p = load_input(cfg);
  TowerReport rep = descend(p, cfg.prime, cfg.depth, caps_of(cfg));
  if (rep.truncated)
    std::cerr << "warning: descent truncated: " << rep.truncated_reason
              << "\n";
  return emit(cfg, to_text(rep), to_json(rep), "tower");
}

void add_check(VerifyCdReport& rep, const std::string& name, bool pass,
               const std::string& detail) {
  rep.checks.push_back({name, pass, detail});
  rep.pass = rep.pass && pass;
}

int cmd_verify_cd(const RunConfig& cfg) {
  Presentation root = fixture("gamma1");
  VerifyCdReport rep;
  rep.p = cfg.prime;
  rep.depth = cfg.depth;
  rep.exploratory = cfg.prime != 3;
  rep.tower = descend(root, cfg.prime, cfg.depth, caps_of(cfg));
  if (rep.exploratory) {
    emit(cfg, to_text(rep), to_json(rep), "verify-cd");
    return 0;
  }

  const auto& levels = rep.tower.levels;
  rep.pass = true;
  {
    bool ok = !levels.empty() && levels[0].index_in_parent == 9;
    add_check(rep, "level-1 kernel has index 9", ok,
              levels.empty() ? "no level computed"
                             : "index " + std::to_string(levels[0].index_in_parent));
  }
  if (!levels.empty()) {
    add_check(rep, "level-1 h1 rank mod 3 is 3", levels[0].h1_fp_rank == 3,
              "h1_fp_rank " + std::to_string(levels[0].h1_fp_rank));
    add_check(rep, "level-1 exponent-3 quotient elementary abelian of rank 3",
              levels[0].expp_elementary && levels[0].expp_rank == 3,
              "elementary " + std::string(levels[0].expp_elementary ? "yes" : "no") +
                  ", rank " + std::to_string(levels[0].expp_rank));
  }
  for (const LevelCertificate& c : levels)
    add_check(rep, "level-" + std::to_string(c.level) + " betti is 0",
              c.betti == 0,
              "betti " + std::to_string(c.betti) + " (" + c.betti_method + ")");
  emit(cfg, to_text(rep), to_json(rep), "verify-cd");
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "homology certificates for p-descent towers of finitely "
      "presented groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* abelianize = app.add_subcommand(
      "abelianize", "Abelian invariants and mod-p quotient rank");
  add_common_options(abelianize, cfg, true);
  CLI::App* kernel = app.add_subcommand(
      "kernel", "Kernel of the maximal elementary abelian p-quotient");
  add_common_options(kernel, cfg, true);
  CLI::App* tower =
      app.add_subcommand("tower", "Iterated descent with certificates");
  add_common_options(tower, cfg, true);
  CLI::App* verify = app.add_subcommand(
      "verify-cd",
      "Verify the Calegari-Dunfield tower claims on the gamma1 fixture");
  add_common_options(verify, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    validate(cfg);
    if (abelianize->parsed()) return cmd_abelianize(cfg);
    if (kernel->parsed()) return cmd_kernel(cfg);
    if (tower->parsed()) return cmd_tower(cfg);
    return cmd_verify_cd(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line() << ", column "
              << e.col() << ")\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const TheoremContradictionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
