#pragma once

#include <cstdint>
#include <vector>

#include "cstat/analysis.hpp"
#include "cstat/report.hpp"
#include "cstat/stirling.hpp"

namespace cstat {

// One routine per acceptance check; the CLI and the acceptance binary share them.

Report verify_tables();

struct EquidistributionBounds {
  int rmax = 4;
  int kmax = 5;
  int nmax = 9;
  std::uint64_t max_cardinality = kDefaultMaxCardinality;
};
Report verify_equidistribution(const EquidistributionBounds& b = {});

Report verify_gjcm_suite(const std::vector<std::string>& patterns = {"213", "2134", "123", "132"}, int N = 7);

Report verify_egf(const std::vector<int>& rs = {2, 3, 4}, int K = 8);

Report verify_gessel_stanley(int kmax = 8, int M = 20);

struct SturmBounds {
  int rmax = 4;
  int kmax = 12;
  int mmax = 5;
  int nmax = 14;
};
Report verify_sturm(const SturmBounds& b = {});

struct MomentBounds {
  int rmax = 5;
  int kmax = 50;
  int gamma_kmax = 30;
  double gamma_tol = 1e-9;
};
Report verify_moments(const MomentBounds& b = {});

Report verify_normality(const std::vector<int>& rs = {2, 3}, const std::vector<int>& ks = {12, 50, 200});

Report verify_conjectures(const ConjectureBounds& b = {});

struct CardinalityBounds {
  int enum_rmax = 4;
  int enum_kmax = 5;
  int formula_rmax = 10;
  int formula_kmax = 30;
  std::uint64_t max_cardinality = kDefaultMaxCardinality;
};
Report verify_cardinalities(const CardinalityBounds& b = {});

}  // namespace cstat
