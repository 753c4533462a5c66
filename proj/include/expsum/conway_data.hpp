#pragma once

// Bundled Conway polynomial data. Regenerate with tools/gen_conway; the test
// suite recomputes every entry from scratch and cross-checks this table.

#include <vector>

namespace expsum {

inline const std::vector<ConwayEntry>& bundled_conway_table() {
  static const std::vector<ConwayEntry> table = {
      {2, 1, {1, 1, 0, 0}},
      {2, 2, {1, 1, 1, 0}},
      {2, 3, {1, 1, 0, 1}},
      {3, 1, {1, 1, 0, 0}},
      {3, 2, {2, 2, 1, 0}},
      {3, 3, {1, 2, 0, 1}},
      {5, 1, {3, 1, 0, 0}},
      {5, 2, {2, 4, 1, 0}},
      {5, 3, {3, 3, 0, 1}},
      {7, 1, {4, 1, 0, 0}},
      {7, 2, {3, 6, 1, 0}},
      {7, 3, {4, 0, 6, 1}},
      {11, 1, {9, 1, 0, 0}},
      {11, 2, {2, 7, 1, 0}},
      {11, 3, {9, 2, 0, 1}},
      {13, 1, {11, 1, 0, 0}},
      {13, 2, {2, 12, 1, 0}},
      {13, 3, {11, 2, 0, 1}},
      {17, 1, {14, 1, 0, 0}},
      {17, 2, {3, 16, 1, 0}},
      {17, 3, {14, 1, 0, 1}},
      {19, 1, {17, 1, 0, 0}},
      {19, 2, {2, 18, 1, 0}},
      {19, 3, {17, 4, 0, 1}},
      {23, 1, {18, 1, 0, 0}},
      {23, 2, {5, 21, 1, 0}},
      {23, 3, {18, 2, 0, 1}},
      {29, 1, {27, 1, 0, 0}},
      {29, 2, {2, 24, 1, 0}},
      {29, 3, {27, 2, 0, 1}},
      {31, 1, {28, 1, 0, 0}},
      {31, 2, {3, 29, 1, 0}},
      {31, 3, {28, 1, 0, 1}},
      {37, 1, {35, 1, 0, 0}},
      {37, 2, {2, 33, 1, 0}},
      {37, 3, {35, 6, 0, 1}},
      {41, 1, {35, 1, 0, 0}},
      {41, 2, {6, 38, 1, 0}},
      {41, 3, {35, 1, 0, 1}},
      {43, 1, {40, 1, 0, 0}},
      {43, 2, {3, 42, 1, 0}},
      {43, 3, {40, 1, 0, 1}},
      {47, 1, {42, 1, 0, 0}},
      {47, 2, {5, 45, 1, 0}},
      {47, 3, {42, 3, 0, 1}},
  };
  return table;
}

}  // namespace expsum
