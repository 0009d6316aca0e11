/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    golden.hpp
 * @brief   Reference values: optimal fidelities, interpolation parameters and
 *          exact Choi matrices for n = 1 and n = 3
 */

#pragma once

#include <string>
#include <vector>

#include "qmv/core.hpp"

namespace qmv::golden {

// Optimal fidelity together with the (unique) optimal t and per-weight c.
struct OptimalRow {
  std::string name;
  std::string table;
  std::string fidelity;
  std::vector<std::string> t;
  std::vector<std::string> c;
};

inline const std::vector<OptimalRow> &optimal_rows() {
  static const std::vector<OptimalRow> rows = {
      {"ID", "0", "1", {"1"}, {"1"}},
      {"NOT", "1", "2/3", {"0"}, {"2/3"}},
      {"MAJ3", "00", "8/9", {"1", "1"}, {"1", "8/9"}},
      {"PAR3", "01", "3/5", {"1/2", "0"}, {"3/5", "3/5"}},
      {"NPAR3", "10", "4/5", {"0", "1"}, {"4/5", "4/5"}},
      {"NMAJ3", "11", "29/45", {"0", "0"}, {"4/5", "29/45"}},
  };
  return rows;
}

// Optimal fidelity of every symmetric self-dual function with n <= 7, keyed by
// truth table f(0)..f(floor(n/2)).
inline const std::vector<std::pair<std::string, std::string>> &sweep() {
  static const std::vector<std::pair<std::string, std::string>> rows = {
      {"0", "1"},
      {"1", "2/3"},
      {"00", "8/9"},
      {"01", "3/5"},
      {"10", "4/5"},
      {"11", "29/45"},
      {"000", "62/75"},
      {"001", "4/7"},
      {"010", "5/7"},
      {"011", "95/153"},
      {"100", "124/153"},
      {"101", "4/7"},
      {"110", "5/7"},
      {"111", "331/525"},
      {"0000", "2888/3675"},
      {"0001", "5/9"},
      {"0010", "2/3"},
      {"0011", "47/78"},
      {"0100", "59/78"},
      {"0101", "5/9"},
      {"0110", "2/3"},
      {"0111", "1141/1845"},
      {"1000", "1444/1845"},
      {"1001", "5/9"},
      {"1010", "2/3"},
      {"1011", "47/78"},
      {"1100", "59/78"},
      {"1101", "5/9"},
      {"1110", "2/3"},
      {"1111", "6841/11025"},
  };
  return rows;
}

// Majority for n = 1, 3, ..., 21.
inline const std::vector<std::string> &majority_sequence() {
  static const std::vector<std::string> v = {
      "1", "8/9", "62/75", "2888/3675", "15014/19845", "117548/160083", "13848922/19324305", "5816048/8281845", "183562382/265939245", "30465827276/44801898141", "6378478534/9503432939",
  };
  return v;
}

// Six-decimal renderings of the first ten majority values.
inline const std::vector<std::string> &majority_decimals() {
  static const std::vector<std::string> v = {
      "1.", "0.888889", "0.826667", "0.785850", "0.756563", "0.734294", "0.716658", "0.702265", "0.690242", "0.680012",
  };
  return v;
}

// Parity for n = 1, 3, ..., 39.
inline const std::vector<std::string> &parity_sequence() {
  static const std::vector<std::string> v = {
      "1", "3/5", "5/7", "5/9", "7/11", "7/13", "3/5", "9/17", "11/19", "11/21", "13/23", "13/25", "5/9", "15/29", "17/31", "17/33", "19/35", "19/37", "7/13", "21/41",
  };
  return v;
}

struct ChoiEntry {
  std::string name;
  std::string table;
  bool ideal; // exact (generally non-CP) superoperator rather than optimal channel
  long denominator;
  std::vector<std::vector<long>> numerators;

  QMatrix matrix() const { return QMatrix::from_ints(numerators, denominator); }
};

inline const std::vector<ChoiEntry> &choi_matrices() {
  static const std::vector<ChoiEntry> v = {
      {"ID", "0", false, 1,
       {
           {1, 0, 0, 1},
           {0, 0, 0, 0},
           {0, 0, 0, 0},
           {1, 0, 0, 1},
       }},
      {"NOT", "1", false, 3,
       {
           {1, 0, 0, -1},
           {0, 2, 0, 0},
           {0, 0, 2, 0},
           {-1, 0, 0, 1},
       }},
      {"MAJ3", "00", false, 9,
       {
           {9, 0, 0, 0, 0, 0, 0, 0, 0, 3, 3, 0, 3, 0, 0, 0},
           {0, 8, -1, 0, -1, 0, 0, 0, 0, 0, 0, 5, 0, 5, -4, 0},
           {0, -1, 8, 0, -1, 0, 0, 0, 0, 0, 0, 5, 0, -4, 5, 0},
           {0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 3},
           {0, -1, -1, 0, 8, 0, 0, 0, 0, 0, 0, -4, 0, 5, 5, 0},
           {0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 3},
           {0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 3},
           {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {3, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
           {3, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
           {0, 5, 5, 0, -4, 0, 0, 0, 0, 0, 0, 8, 0, -1, -1, 0},
           {3, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
           {0, 5, -4, 0, 5, 0, 0, 0, 0, 0, 0, -1, 0, 8, -1, 0},
           {0, -4, 5, 0, 5, 0, 0, 0, 0, 0, 0, -1, 0, -1, 8, 0},
           {0, 0, 0, 3, 0, 3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 9},
       }},
      {"PAR3", "01", false, 15,
       {
           {9, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
           {0, 6, 1, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 4, 0},
           {0, 1, 6, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 4, -1, 0},
           {0, 0, 0, 9, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
           {0, 1, 1, 0, 6, 0, 0, 0, 0, 0, 0, 4, 0, -1, -1, 0},
           {0, 0, 0, -1, 0, 9, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
           {0, 0, 0, -1, 0, -1, 9, 0, 0, 0, 0, 0, 0, 0, 0, 1},
           {0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0},
           {1, 0, 0, 0, 0, 0, 0, 0, 0, 9, -1, 0, -1, 0, 0, 0},
           {1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 9, 0, -1, 0, 0, 0},
           {0, -1, -1, 0, 4, 0, 0, 0, 0, 0, 0, 6, 0, 1, 1, 0},
           {1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 9, 0, 0, 0},
           {0, -1, 4, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 6, 1, 0},
           {0, 4, -1, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 6, 0},
           {0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 9},
       }},
      {"NPAR3", "10", false, 5,
       {
           {1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, -1, 0, 0, 0},
           {0, 4, -1, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 1, -4, 0},
           {0, -1, 4, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, -4, 1, 0},
           {0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1},
           {0, -1, -1, 0, 4, 0, 0, 0, 0, 0, 0, -4, 0, 1, 1, 0},
           {0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1},
           {0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1},
           {0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0},
           {-1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
           {-1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
           {0, 1, 1, 0, -4, 0, 0, 0, 0, 0, 0, 4, 0, -1, -1, 0},
           {-1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
           {0, 1, -4, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 4, -1, 0},
           {0, -4, 1, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 4, 0},
           {0, 0, 0, -1, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
       }},
      {"NMAJ3", "11", false, 45,
       {
           {9, 0, 0, 0, 0, 0, 0, 0, 0, -9, -9, 0, -9, 0, 0, 0},
           {0, 16, 1, 0, 1, 0, 0, 0, 0, 0, 0, -11, 0, -11, 4, 0},
           {0, 1, 16, 0, 1, 0, 0, 0, 0, 0, 0, -11, 0, 4, -11, 0},
           {0, 0, 0, 29, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -9},
           {0, 1, 1, 0, 16, 0, 0, 0, 0, 0, 0, 4, 0, -11, -11, 0},
           {0, 0, 0, -1, 0, 29, -1, 0, 0, 0, 0, 0, 0, 0, 0, -9},
           {0, 0, 0, -1, 0, -1, 29, 0, 0, 0, 0, 0, 0, 0, 0, -9},
           {0, 0, 0, 0, 0, 0, 0, 36, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0, 0, 0, 0, 36, 0, 0, 0, 0, 0, 0, 0},
           {-9, 0, 0, 0, 0, 0, 0, 0, 0, 29, -1, 0, -1, 0, 0, 0},
           {-9, 0, 0, 0, 0, 0, 0, 0, 0, -1, 29, 0, -1, 0, 0, 0},
           {0, -11, -11, 0, 4, 0, 0, 0, 0, 0, 0, 16, 0, 1, 1, 0},
           {-9, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 29, 0, 0, 0},
           {0, -11, 4, 0, -11, 0, 0, 0, 0, 0, 0, 1, 0, 16, 1, 0},
           {0, 4, -11, 0, -11, 0, 0, 0, 0, 0, 0, 1, 0, 1, 16, 0},
           {0, 0, 0, -9, 0, -9, -9, 0, 0, 0, 0, 0, 0, 0, 0, 9},
       }},
      {"ID", "0", true, 1,
       {
           {1, 0, 0, 1},
           {0, 0, 0, 0},
           {0, 0, 0, 0},
           {1, 0, 0, 1},
       }},
      {"NOT", "1", true, 1,
       {
           {0, 0, 0, -1},
           {0, 1, 0, 0},
           {0, 0, 1, 0},
           {-1, 0, 0, 0},
       }},
      {"MAJ3", "00", true, 6,
       {
           {6, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 0, 0, 0},
           {0, 6, -1, 0, -1, 0, 0, 0, 0, 0, 0, 4, 0, 4, -4, 0},
           {0, -1, 6, 0, -1, 0, 0, 0, 0, 0, 0, 4, 0, -4, 4, 0},
           {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2},
           {0, -1, -1, 0, 6, 0, 0, 0, 0, 0, 0, -4, 0, 4, 4, 0},
           {0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2},
           {0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},
           {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0},
           {2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0},
           {0, 4, 4, 0, -4, 0, 0, 0, 0, 0, 0, 6, 0, -1, -1, 0},
           {2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0},
           {0, 4, -4, 0, 4, 0, 0, 0, 0, 0, 0, -1, 0, 6, -1, 0},
           {0, -4, 4, 0, 4, 0, 0, 0, 0, 0, 0, -1, 0, -1, 6, 0},
           {0, 0, 0, 2, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 6},
       }},
      {"PAR3", "01", true, 3,
       {
           {3, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
           {0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 4, 0},
           {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 4, -1, 0},
           {0, 0, 0, 3, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
           {0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, -1, -1, 0},
           {0, 0, 0, -1, 0, 3, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
           {0, 0, 0, -1, 0, -1, 3, 0, 0, 0, 0, 0, 0, 0, 0, 1},
           {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {1, 0, 0, 0, 0, 0, 0, 0, 0, 3, -1, 0, -1, 0, 0, 0},
           {1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 3, 0, -1, 0, 0, 0},
           {0, -1, -1, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0},
           {1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 3, 0, 0, 0},
           {0, -1, 4, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
           {0, 4, -1, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0},
           {0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 3},
       }},
      {"NPAR3", "10", true, 3,
       {
           {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, -1, 0, 0, 0},
           {0, 3, -1, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 1, -4, 0},
           {0, -1, 3, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, -4, 1, 0},
           {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1},
           {0, -1, -1, 0, 3, 0, 0, 0, 0, 0, 0, -4, 0, 1, 1, 0},
           {0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1},
           {0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
           {0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0},
           {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0},
           {-1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0},
           {0, 1, 1, 0, -4, 0, 0, 0, 0, 0, 0, 3, 0, -1, -1, 0},
           {-1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0},
           {0, 1, -4, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 3, -1, 0},
           {0, -4, 1, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 3, 0},
           {0, 0, 0, -1, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       }},
      {"NMAJ3", "11", true, 6,
       {
           {0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, -2, 0, 0, 0},
           {0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, -4, 0, -4, 4, 0},
           {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -4, 0, 4, -4, 0},
           {0, 0, 0, 6, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -2},
           {0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, -4, -4, 0},
           {0, 0, 0, -1, 0, 6, -1, 0, 0, 0, 0, 0, 0, 0, 0, -2},
           {0, 0, 0, -1, 0, -1, 6, 0, 0, 0, 0, 0, 0, 0, 0, -2},
           {0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0},
           {-2, 0, 0, 0, 0, 0, 0, 0, 0, 6, -1, 0, -1, 0, 0, 0},
           {-2, 0, 0, 0, 0, 0, 0, 0, 0, -1, 6, 0, -1, 0, 0, 0},
           {0, -4, -4, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0},
           {-2, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 6, 0, 0, 0},
           {0, -4, 4, 0, -4, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
           {0, 4, -4, 0, -4, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0},
           {0, 0, 0, -2, 0, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       }},
  };
  return v;
}

// Extremal l = 1 Choi matrices (partial trace and universal NOT).
inline QMatrix extremal_l1_tr() {
  return QMatrix::from_ints({{1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 1}});
}
inline QMatrix extremal_l1_unot() {
  return QMatrix::from_ints({{1, 0, 0, -1}, {0, 2, 0, 0}, {0, 0, 2, 0}, {-1, 0, 0, 1}}, 3);
}

// Dual Clebsch-Gordan transform for l = 1.
inline CMatrix dual_cg_l1() {
  const double s = 1 / std::sqrt(2.0);
  CMatrix d(4, 4);
  d << s, 0, 0, s, 0, 0, 1, 0, -s, 0, 0, s, 0, -1, 0, 0;
  return d;
}

// Eigenvalues of the exact single-qubit NOT superoperator's Choi matrix.
inline const std::vector<double> &ideal_not_spectrum() {
  static const std::vector<double> v = {-1, 1, 1, 1};
  return v;
}

} // namespace qmv::golden
