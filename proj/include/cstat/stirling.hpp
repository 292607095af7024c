#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "cstat/polynomial.hpp"

namespace cstat {

/// A word over {1^r, ..., k^r} in which letters between two equal letters are never smaller.
class StirlingPermutation {
 public:
  StirlingPermutation() = default;
  /// Throws InvalidInput when the word is not an r-Stirling permutation of order k.
  StirlingPermutation(std::vector<int> word, int r, int k);

  int r() const { return r_; }
  int order() const { return k_; }
  const std::vector<int>& word() const { return w_; }
  std::string to_string() const;

  friend bool operator==(const StirlingPermutation&, const StirlingPermutation&) = default;

 private:
  std::vector<int> w_;
  int r_ = 1, k_ = 0;
};

enum class StirlingStat { plat, lplat, ascplat, lascplat, des };

StirlingStat parse_stirling_stat(std::string_view name);

bool is_valid_stirling(std::span<const int> word, int r, int k);
int stirling_stat(std::span<const int> word, StirlingStat which);

/// prod_{j=1}^{k-1} (rj+1).
BigInt stirling_cardinality(int r, int k);

inline constexpr std::uint64_t kDefaultMaxCardinality = 10'000'000;

/// Generates Q_{r,k} by inserting blocks (j+1)^r into words of order j.
void for_each_stirling(int r, int k, const std::function<void(const std::vector<int>&)>& visit,
                       std::uint64_t max_cardinality = kDefaultMaxCardinality);
std::vector<StirlingPermutation> enumerate_stirling(int r, int k,
                                                    std::uint64_t max_cardinality = kDefaultMaxCardinality);

/// Sum over Q_{r,k} of a^first(rho) b^second(rho).
IntBivariate stirling_joint_distribution(int r, int k, StirlingStat first, StirlingStat second,
                                         std::uint64_t max_cardinality = kDefaultMaxCardinality);
IntPolynomial stirling_distribution(int r, int k, StirlingStat which,
                                    std::uint64_t max_cardinality = kDefaultMaxCardinality);

}  // namespace cstat
