#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cstat/polynomial.hpp"

namespace cstat {

/// A permutation of [n] in one-line notation. Letters are 1-based; positions passed to
/// and returned from the free functions below are 1-based as well.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `word` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// Accepts "4351627" (single digits) or a comma/space separated list "10,2,1,...".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(w_.size()); }
  int at(int position) const { return w_[static_cast<std::size_t>(position - 1)]; }
  const std::vector<int>& word() const { return w_; }
  std::span<const int> letters() const { return w_; }
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

enum class Stat { des, pk, lpk, ides, ipk, ilpk };

Stat parse_stat(std::string_view name);
std::string_view stat_name(Stat s);

/// Order-isomorphic relabelling onto 1..n; letters must be pairwise distinct.
Permutation standardize(std::span<const int> word);
Permutation inverse(const Permutation& pi);
Permutation reverse_complement(const Permutation& pi);

// Raw-word statistics. These accept any word of distinct integers.
int descents(std::span<const int> w);
int peaks(std::span<const int> w);
int left_peaks(std::span<const int> w);
int right_valleys(std::span<const int> w);

int stat(const Permutation& pi, Stat which);

/// True when the window w[start, start+sigma.size()) is order-isomorphic to sigma (0-based start).
bool window_matches(std::span<const int> w, int start, std::span<const int> sigma);
/// 1-based start positions of consecutive occurrences of sigma in pi.
std::vector<int> occurrence_positions(const Permutation& pi, const Permutation& sigma);
int count_occurrences(const Permutation& pi, const Permutation& sigma);

/// Visits every permutation of [n] in lexicographic order as a raw word.
template <class F>
void for_each_permutation(int n, F&& visit) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(std::as_const(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

inline constexpr int kDefaultOracleBound = 10;

/// Brute-force sum over S_n of s^occ_sigma(pi) t^(stat(pi)+shift), first variable s.
IntBivariate brute_distribution(int n, const Permutation& sigma, Stat which, int shift,
                                int bound = kDefaultOracleBound);

}  // namespace cstat
