#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cstat/permutation.hpp"
#include "cstat/stirling.hpp"

namespace cstat {

/// A permutation with marked occurrences of sigma that chain-overlap and cover every letter.
struct MarkedCluster {
  Permutation pi;
  std::vector<int> marks;  // 1-based, increasing
  Permutation sigma;
};

/// Positions i in [m-1] where a copy of sigma shifted by i agrees with sigma on the overlap.
std::vector<int> overlap_set(const Permutation& sigma);
bool is_non_overlapping(const Permutation& sigma);

/// Cluster predicate: every mark starts an occurrence, marks start at 1, end at n-m+1,
/// and consecutive marks are at most m-1 apart.
bool is_cluster(const Permutation& pi, std::span<const int> marks, const Permutation& sigma);

inline constexpr int kDefaultClusterBound = 9;

void for_each_marked_cluster(const Permutation& sigma, int n,
                             const std::function<void(const MarkedCluster&)>& visit,
                             int bound = kDefaultClusterBound);
std::vector<MarkedCluster> enumerate_marked_clusters(const Permutation& sigma, int n,
                                                     int bound = kDefaultClusterBound);

/// The pattern 2134...(r+1).
Permutation head_pattern(int m);
/// The pattern 12...(m-2)m(m-1).
Permutation tail_pattern(int m);

enum class PMethod { characterization, insertion };

/// Permutations of length rk+1 whose inverse is a 2134...(r+1)-cluster.
void for_each_P(int r, int k, PMethod method, const std::function<void(const std::vector<int>&)>& visit,
                std::uint64_t max_cardinality = kDefaultMaxCardinality);
std::vector<Permutation> enumerate_P(int r, int k, PMethod method,
                                     std::uint64_t max_cardinality = kDefaultMaxCardinality);

enum class ClusterPair { des_pk, des_lpk };

/// Sum over P_{r,k} of t^des y^pk (or y^lpk); first variable t.
IntBivariate cluster_distribution(int r, int k, ClusterPair pair,
                                  std::uint64_t max_cardinality = kDefaultMaxCardinality);

}  // namespace cstat
