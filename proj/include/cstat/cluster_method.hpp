#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cstat/permutation.hpp"
#include "cstat/report.hpp"

namespace cstat {

enum class Variant { head, tail };

/// The pattern 2134...m (head) or 12...(m-2)m(m-1) (tail).
struct PatternFamily {
  int m = 3;
  Variant variant = Variant::head;

  Permutation pattern() const;
  friend bool operator==(const PatternFamily&, const PatternFamily&) = default;
};

/// Identifies sigma as a member of one of the two families, if it is one.
std::optional<PatternFamily> recognize(const Permutation& sigma);

/// polys[n] = sum over S_n of s^occ t^(stat + shift); first variable s.
struct StatPolyFamily {
  PatternFamily family;
  Stat stat = Stat::ides;
  int nmax = 0;
  int smax = 0;
  std::vector<IntBivariate> polys;

  /// The s=0 specialization at length n.
  IntPolynomial avoidance(int n) const { return polys.at(static_cast<std::size_t>(n)).row(0); }
};

/// Exponent shift applied to the statistic: +1 for ides and ipk, 0 for ilpk.
int stat_shift(Stat which);

/// Largest possible number of occurrences of a non-overlapping pattern of length m in S_n.
int max_occurrences(int m, int n);

StatPolyFamily a_ides(int m, int N, int smax);
StatPolyFamily p_ipk(int m, int N, Variant variant, int smax);
StatPolyFamily p_ilpk(int m, int N, int smax);

/// Dispatches to the engine above that matches `which` (ides, ipk or ilpk).
StatPolyFamily fast_stat_family(const PatternFamily& family, Stat which, int N, int smax);

/// Same shape as the fast families, by enumeration of S_n; entries above smax are dropped.
StatPolyFamily brute_stat_family(const PatternFamily& family, Stat which, int N, int smax,
                                 int bound = kDefaultOracleBound);

inline constexpr int kDefaultGjcmBound = 8;

/// Compares (1 - x - R(s-1, x))^{-1}, with R assembled from enumerated clusters,
/// against the brute-force occurrence distribution for n <= N.
Report verify_gjcm(const Permutation& sigma, int N, int bound = kDefaultGjcmBound);

}  // namespace cstat
