#include "cstat/clusters.hpp"

#include <string>

#include "cstat/errors.hpp"

namespace cstat {

std::vector<int> overlap_set(const Permutation& sigma) {
  const int m = sigma.size();
  if (m < 2) throw InvalidInput("overlap set needs a pattern of length >= 2");
  const auto w = sigma.letters();
  std::vector<int> out;
  for (int i = 1; i <= m - 1; ++i)
    if (standardize(w.subspan(static_cast<std::size_t>(i))) ==
        standardize(w.first(static_cast<std::size_t>(m - i))))
      out.push_back(i);
  return out;
}

bool is_non_overlapping(const Permutation& sigma) {
  const auto o = overlap_set(sigma);
  return o.size() == 1 && o[0] == sigma.size() - 1;
}

bool is_cluster(const Permutation& pi, std::span<const int> marks, const Permutation& sigma) {
  const int n = pi.size(), m = sigma.size();
  if (marks.empty() || n < m) return false;
  if (marks.front() != 1 || marks.back() != n - m + 1) return false;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (i > 0 && (marks[i] <= marks[i - 1] || marks[i] - marks[i - 1] > m - 1)) return false;
    if (!window_matches(pi.letters(), marks[i] - 1, sigma.letters())) return false;
  }
  return true;
}

namespace {

// Extends a chain of marks chosen from `occ` (sorted) toward the final position.
void extend_marks(const std::vector<int>& occ, std::size_t last, int final_pos, int max_gap,
                  std::vector<int>& marks, const std::function<void()>& emit) {
  if (occ[last] == final_pos) {
    emit();
    return;
  }
  for (std::size_t j = last + 1; j < occ.size() && occ[j] - occ[last] <= max_gap; ++j) {
    marks.push_back(occ[j]);
    extend_marks(occ, j, final_pos, max_gap, marks, emit);
    marks.pop_back();
  }
}

}  // namespace

void for_each_marked_cluster(const Permutation& sigma, int n,
                             const std::function<void(const MarkedCluster&)>& visit, int bound) {
  const int m = sigma.size();
  if (m < 2) throw InvalidInput("pattern must have length at least 2");
  if (n > bound)
    throw ResourceLimit("cluster enumeration at n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  if (n < m) return;
  std::vector<int> occ;
  std::vector<int> marks;
  for_each_permutation(n, [&](const std::vector<int>& w) {
    occ.clear();
    for (int i = 0; i + m <= n; ++i)
      if (window_matches(w, i, sigma.letters())) occ.push_back(i + 1);
    if (occ.empty() || occ.front() != 1 || occ.back() != n - m + 1) return;
    Permutation pi(w);
    marks.assign(1, 1);
    extend_marks(occ, 0, n - m + 1, m - 1, marks, [&] { visit(MarkedCluster{pi, marks, sigma}); });
  });
}

std::vector<MarkedCluster> enumerate_marked_clusters(const Permutation& sigma, int n, int bound) {
  std::vector<MarkedCluster> out;
  for_each_marked_cluster(sigma, n, [&](const MarkedCluster& c) { out.push_back(c); }, bound);
  return out;
}

Permutation head_pattern(int m) {
  if (m < 2) throw InvalidInput("pattern length must be at least 2");
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[0], w[1]);
  return Permutation(std::move(w));
}

Permutation tail_pattern(int m) {
  if (m < 2) throw InvalidInput("pattern length must be at least 2");
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[static_cast<std::size_t>(m - 2)], w[static_cast<std::size_t>(m - 1)]);
  return Permutation(std::move(w));
}

namespace {

void check_P_args(int r, int k, std::uint64_t max_cardinality) {
  if (r < 2 || k < 1) throw InvalidInput("P_{r,k} needs r >= 2 and k >= 1");
  if (stirling_cardinality(r, k) > BigInt(std::to_string(max_cardinality)))
    throw ResourceLimit("|P_{" + std::to_string(r) + "," + std::to_string(k) +
                        "}| exceeds the cardinality bound " + std::to_string(max_cardinality));
}

// Merges the increasing skeleton (letters other than ri+2) with the special letters ri+2,
// where ri+2 must be placed before the skeleton letter ri+1.
struct CharacterizationWalk {
  int r, k, n;
  std::vector<int> skeleton;
  std::vector<bool> used;
  std::vector<int> word;
  const std::function<void(const std::vector<int>&)>& visit;

  void run(std::size_t next_skeleton, int placed_specials) {
    if (next_skeleton == skeleton.size() && placed_specials == k) {
      visit(word);
      return;
    }
    if (next_skeleton < skeleton.size()) {
      const int letter = skeleton[next_skeleton];
      const bool blocked = (letter - 1) % r == 0 && (letter - 1) / r < k && !used[static_cast<std::size_t>((letter - 1) / r)];
      if (!blocked) {
        word.push_back(letter);
        run(next_skeleton + 1, placed_specials);
        word.pop_back();
      }
    }
    for (int i = 0; i < k; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(i)] = true;
      word.push_back(r * i + 2);
      run(next_skeleton, placed_specials + 1);
      word.pop_back();
      used[static_cast<std::size_t>(i)] = false;
    }
  }
};

void insertion_walk(std::vector<int>& w, int level, int r, int k,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (level == k) {
    visit(w);
    return;
  }
  const int n = r * level + 1;
  for (int pos = 0; pos < n; ++pos) {
    w.insert(w.begin() + pos, n + 1);
    for (int a = n + 2; a <= r * (level + 1) + 1; ++a) w.push_back(a);
    insertion_walk(w, level + 1, r, k, visit);
    w.resize(static_cast<std::size_t>(n + 1));
    w.erase(w.begin() + pos);
  }
}

}  // namespace

void for_each_P(int r, int k, PMethod method, const std::function<void(const std::vector<int>&)>& visit,
                std::uint64_t max_cardinality) {
  check_P_args(r, k, max_cardinality);
  const int n = r * k + 1;
  if (method == PMethod::characterization) {
    CharacterizationWalk walk{r, k, n, {}, std::vector<bool>(static_cast<std::size_t>(k), false), {}, visit};
    for (int a = 1; a <= n; ++a)
      if (!(a >= 2 && (a - 2) % r == 0 && (a - 2) / r < k)) walk.skeleton.push_back(a);
    walk.word.reserve(static_cast<std::size_t>(n));
    walk.run(0, 0);
  } else {
    std::vector<int> w = head_pattern(r + 1).word();
    w.reserve(static_cast<std::size_t>(n));
    insertion_walk(w, 1, r, k, visit);
  }
}

std::vector<Permutation> enumerate_P(int r, int k, PMethod method, std::uint64_t max_cardinality) {
  std::vector<Permutation> out;
  for_each_P(r, k, method, [&](const std::vector<int>& w) { out.emplace_back(w); }, max_cardinality);
  return out;
}

IntBivariate cluster_distribution(int r, int k, ClusterPair pair, std::uint64_t max_cardinality) {
  const std::size_t dim = static_cast<std::size_t>(r * k) + 2;
  std::vector<std::vector<long long>> counts(dim, std::vector<long long>(dim, 0));
  for_each_P(
      r, k, PMethod::characterization,
      [&](const std::vector<int>& w) {
        const int second = pair == ClusterPair::des_pk ? peaks(w) : left_peaks(w);
        ++counts[static_cast<std::size_t>(descents(w))][static_cast<std::size_t>(second)];
      },
      max_cardinality);
  std::vector<std::vector<BigInt>> rows(dim, std::vector<BigInt>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) rows[i][j] = static_cast<long>(counts[i][j]);
  return IntBivariate(std::move(rows));
}

}  // namespace cstat
