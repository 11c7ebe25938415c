#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qpark/poly.hpp"

namespace qpark {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> lines;
  double seconds = 0;

  void check(bool ok, const std::string& what);
  void note(const std::string& what);
};

/// Parking table for W = S_4, c = (s1,s2,s3), p = 3: per-J box counts,
/// superset park values, and the Kirkman row, checked against the embedded
/// expected table.
struct ParkingTableReport {
  std::vector<std::pair<std::set<int>, long>> box_counts;
  std::vector<std::pair<std::set<int>, BigInt>> park_values;
  std::vector<BigInt> kirkman;
  bool pass = true;
  double seconds = 0;
};

ParkingTableReport parking_table_a3p3();

// Named verification sweeps; "main", "cell", "trace", "parking", "jm",
// "lascoux", "kirkman", "noncrossing", "homfly", plus "cellsums" (the trace =
// cell-sum bridge) and "properties" (ring/group/trace axioms).
SuiteResult verify_suite(const std::string& name);

std::vector<std::string> suite_names();

}  // namespace qpark
