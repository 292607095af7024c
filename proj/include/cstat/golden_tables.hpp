#pragma once

#include <string>
#include <vector>

namespace cstat {

struct GoldenRow {
  int index;                        // k for the r-families, n for the pattern families
  std::vector<std::string> coeffs;  // ascending powers of t
};

struct GoldenTable {
  std::string name;
  std::string family;   // cdes, cpk, clpk, ides, ipk, ilpk
  int param;            // r for the r-families, m for the pattern families
  std::string pattern;  // empty for the r-families
  std::vector<GoldenRow> rows;
};

/// Reference coefficient tables, used as regression data.
const std::vector<GoldenTable>& golden_tables();

}  // namespace cstat
