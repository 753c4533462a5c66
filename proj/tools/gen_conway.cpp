// Regenerates include/expsum/conway_data.hpp: Conway polynomials for all
// primes p <= 47 and degrees s <= 3.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "expsum/gf.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_conway <output-header-path>\n";
    return 1;
  }
  std::ofstream out(argv[1]);
  if (!out) {
    std::cerr << "cannot open " << argv[1] << "\n";
    return 1;
  }
  out << "#pragma once\n\n"
      << "// Bundled Conway polynomial data. Regenerate with tools/gen_conway; the test\n"
      << "// suite recomputes every entry from scratch and cross-checks this table.\n\n"
      << "#include <vector>\n\n"
      << "namespace expsum {\n\n"
      << "inline const std::vector<ConwayEntry>& bundled_conway_table() {\n"
      << "  static const std::vector<ConwayEntry> table = {\n";
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    for (unsigned s = 1; s <= 3; ++s) {
      auto c = expsum::compute_conway_polynomial(p, s);
      out << "      {" << p << ", " << s << ", {";
      for (unsigned k = 0; k < 4; ++k) {
        out << (k < c.size() ? c[k] : 0);
        if (k < 3) out << ", ";
      }
      out << "}},\n";
    }
  }
  out << "  };\n  return table;\n}\n\n}  // namespace expsum\n";
  std::cout << "wrote " << argv[1] << "\n";
  return 0;
}
