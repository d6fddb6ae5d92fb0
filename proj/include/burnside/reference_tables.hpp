#pragma once

/// Frozen expected values for the extended mark matrices of the two builtin
/// decorations. Two entries differ from earlier published transcriptions:
/// the A4 row count in the larger table (4, the number of conjugacy classes
/// of A4) and the sign pair at the S3xC2'/S4' columns of its last row (the
/// bound restriction maps force +1 there and -1 at S4'). The `verify`
/// subcommand and the acceptance suite diff computed tables against these.

#include <string>
#include <vector>

namespace burnside::reference {

inline const std::vector<std::string>& s4_basis_labels() {
  static const std::vector<std::string> v{"1",  "H2", "C2", "C3",  "C4",  "S3",  "K1",  "K2",
                                          "D8", "A4", "S4", "K1'", "K2'", "D8'", "A4'", "S4'"};
  return v;
}

inline const std::vector<std::string>& s5_basis_labels() {
  static const std::vector<std::string> v{"1",     "H2",  "C2",  "C3",  "C4",  "C5",  "S3",     "H6",  "C3xC2",
                                          "D10",   "K1",  "K2",  "H20", "D8",  "A4",  "S3xC2",  "S4",  "A5",
                                          "S5",    "K1'", "K2'", "D8'", "A4'", "S3xC2'", "S4'", "A5'", "S5'"};
  return v;
}

/// 16 rows, 17 columns: the 16 mark columns in basis order, then the
/// orbit-count column printed under the header M.
inline const std::vector<std::vector<long long>>& s4_extended_marks() {
  static const std::vector<std::vector<long long>> m{
      {24, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {12, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},
      {12, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},
      {8, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3},
      {6, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4},
      {4, 0, 2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3},
      {6, 2, 2, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 4},
      {6, 6, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 6, 0, 0, 0, 4},
      {3, 3, 1, 0, 1, 0, 1, 3, 1, 0, 0, 1, 3, 1, 0, 0, 5},
      {2, 2, 0, 2, 0, 0, 0, 2, 0, 2, 0, 0, 2, 0, 2, 0, 4},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 5},
      {6, 2, 2, 0, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1},
      {6, 6, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, -6, 0, 0, 0, 1},
      {3, 3, 1, 0, 1, 0, 1, 3, 1, 0, 0, 1, 3, -1, 0, 0, 2},
      {2, 2, 0, 2, 0, 0, 0, 2, 0, 2, 0, 0, -2, 0, -2, 0, 3},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, 1, -1, 3}};
  return m;
}

/// 27 rows, 28 columns, same layout.
inline const std::vector<std::vector<long long>>& s5_extended_marks() {
  static const std::vector<std::vector<long long>> m{
      {120, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {60, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},
      {60, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},
      {40, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3},
      {30, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4},
      {24, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5},
      {20, 0, 6, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3},
      {20, 4, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3},
      {20, 0, 2, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6},
      {12, 4, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4},
      {30, 2, 6, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 4},
      {30, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 4},
      {6, 2, 0, 0, 2, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5},
      {15, 3, 3, 0, 1, 0, 0, 0, 0, 0, 1, 3, 0, 1, 0, 0, 0, 0, 0, 1, 3, 1, 0, 0, 0, 0, 0, 5},
      {10, 2, 0, 4, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 4},
      {10, 2, 4, 1, 0, 0, 1, 1, 1, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 6},
      {5, 1, 3, 2, 1, 0, 2, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 5},
      {2, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0, 2, 0, 0, 2, 0, 0, 2, 0, 2, 0, 0, 2, 0, 5},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 7},
      {30, 2, 6, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 1},
      {30, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, -6, 0, 0, 0, 0, 0, 0, 1},
      {15, 3, 3, 0, 1, 0, 0, 0, 0, 0, 1, 3, 0, 1, 0, 0, 0, 0, 0, 1, 3, -1, 0, 0, 0, 0, 0, 2},
      {10, 2, 0, 4, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, -2, 0, -2, 0, 0, 0, 0, 3},
      {10, 2, 4, 1, 0, 0, 1, 1, 1, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, -2, 0, 0, 0, -1, 0, 0, 0, 3},
      {5, 1, 3, 2, 1, 0, 2, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, -1, 1, 0, -1, 0, 0, 3},
      {2, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0, 2, 0, 0, 2, 0, 0, -2, 0, -2, 0, 0, -2, 0, 4},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, 1, 1, -1, 1, -1, 5}};
  return m;
}

}  // namespace burnside::reference
