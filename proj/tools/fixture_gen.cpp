// Build-time helper: writes the derived gamma2 fixture (the simplified
// kernel presentation computed from gamma1) to the given path, so the
// checked-in tree never carries a hand-edited copy.

#include <fstream>
#include <iostream>

#include "homotower/fixtures.hpp"
#include "homotower/fpres.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: fixture_gen <output.fp>\n";
    return 2;
  }
  std::ofstream out(argv[1]);
  if (!out) {
    std::cerr << "cannot write " << argv[1] << "\n";
    return 2;
  }
  out << "Gamma2 := Group "
      << homotower::print_presentation(homotower::fixture("gamma2")) << "\n";
  return 0;
}
