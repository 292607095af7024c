#include <doctest.h>

#include <set>

#include "cstat/clusters.hpp"
#include "cstat/errors.hpp"

using namespace cstat;

namespace {

// Characterization oracle over all of S_n.
bool in_P(const std::vector<int>& w, int r, int k) {
  const int n = r * k + 1;
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i;
  int last = -1;
  for (int a = 1; a <= n; ++a) {
    const bool special = a >= 2 && (a - 2) % r == 0 && (a - 2) / r < k;
    if (special) continue;
    if (pos[static_cast<std::size_t>(a)] < last) return false;
    last = pos[static_cast<std::size_t>(a)];
  }
  for (int i = 0; i < k; ++i)
    if (pos[static_cast<std::size_t>(r * i + 2)] > pos[static_cast<std::size_t>(r * i + 1)]) return false;
  return true;
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("overlap sets") {
  CHECK(overlap_set(Permutation::parse("2134")) == std::vector<int>{3});
  CHECK(overlap_set(Permutation::parse("123")) == std::vector<int>{1, 2});
  CHECK(overlap_set(Permutation::parse("1243")) == std::vector<int>{3});
  CHECK(is_non_overlapping(Permutation::parse("213")));
  CHECK_FALSE(is_non_overlapping(Permutation::parse("1324")));
  for (int m = 3; m <= 7; ++m) {
    CHECK(is_non_overlapping(head_pattern(m)));
    CHECK(is_non_overlapping(tail_pattern(m)));
    CHECK(reverse_complement(head_pattern(m)) == tail_pattern(m));
  }
}

TEST_CASE("marked clusters") {
  const auto p213 = Permutation::parse("213");
  const auto c7 = enumerate_marked_clusters(p213, 7);
  bool found = false;
  for (const auto& c : c7) found = found || (c.pi.to_string() == "4351627" && c.marks == std::vector<int>{1, 3, 5});
  CHECK(found);
  CHECK(enumerate_marked_clusters(p213, 4).empty());
  CHECK(is_cluster(Permutation::parse("4351627"), std::vector<int>{1, 3, 5}, p213));

  const auto p123 = Permutation::parse("123");
  const auto pi = Permutation::parse("618923574");
  for (const auto& c : enumerate_marked_clusters(p123, 9))
    CHECK_FALSE((c.pi == pi && c.marks == std::vector<int>{2, 5, 6}));
  CHECK_THROWS_AS(enumerate_marked_clusters(p123, 10), ResourceLimit);

  // Overlapping pattern: increasing runs of length 4 carry marks {1,2}; {1} alone does not cover.
  const auto c4 = enumerate_marked_clusters(p123, 4);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].marks == std::vector<int>{1, 2});
  CHECK(enumerate_marked_clusters(p123, 5).size() == 2);  // {1,3} and {1,2,3}
}

TEST_CASE("non-overlapping clusters have forced marks") {
  for (const char* s : {"213", "132", "2134"}) {
    const auto sigma = Permutation::parse(s);
    const int m = sigma.size();
    for (int n = m; n <= 9; ++n)
      for (const auto& c : enumerate_marked_clusters(sigma, n)) {
        REQUIRE((n - 1) % (m - 1) == 0);
        std::vector<int> forced;
        for (int i = 1; i <= n - m + 1; i += m - 1) forced.push_back(i);
        REQUIRE(c.marks == forced);
      }
  }
}

TEST_CASE("P generators") {
  CHECK(as_set(enumerate_P(2, 2, PMethod::characterization)) ==
        std::set<Permutation>{Permutation::parse("21435"), Permutation::parse("24135"), Permutation::parse("42135")});
  for (int r = 2; r <= 6; ++r) CHECK(enumerate_P(r, 1, PMethod::insertion) == std::vector<Permutation>{head_pattern(r + 1)});
  CHECK(as_set(enumerate_P(2, 3, PMethod::insertion)).count(Permutation::parse("4621357")) == 1);

  for (int r = 2; r <= 4; ++r)
    for (int k = 1; k <= 5; ++k) {
      const auto a = enumerate_P(r, k, PMethod::characterization);
      const auto b = enumerate_P(r, k, PMethod::insertion);
      CHECK(as_set(a) == as_set(b));
      CHECK(as_set(a).size() == a.size());
      CHECK(BigInt(static_cast<long>(a.size())) == stirling_cardinality(r, k));
    }
  // Against the characterization applied to every permutation.
  for (auto [r, k] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 2}}) {
    std::set<Permutation> oracle;
    for_each_permutation(r * k + 1, [&](const std::vector<int>& w) {
      if (in_P(w, r, k)) oracle.insert(Permutation(w));
    });
    CHECK(as_set(enumerate_P(r, k, PMethod::characterization)) == oracle);
    // The same set as inverses of head-pattern clusters.
    std::set<Permutation> inv;
    for (const auto& c : enumerate_marked_clusters(head_pattern(r + 1), r * k + 1)) inv.insert(inverse(c.pi));
    CHECK(inv == oracle);
  }
  CHECK_THROWS_AS(enumerate_P(3, 9, PMethod::insertion, 1000), ResourceLimit);
  CHECK_THROWS_AS(enumerate_P(1, 3, PMethod::insertion), InvalidInput);
}

TEST_CASE("cluster distributions") {
  IntBivariate pk, lpk;
  pk.set(2, 0, 1);
  pk.set(2, 1, 1);
  pk.set(1, 1, 1);
  lpk.set(1, 1, 1);
  lpk.set(2, 1, 1);
  lpk.set(2, 2, 1);
  CHECK(cluster_distribution(2, 2, ClusterPair::des_pk) == pk);
  CHECK(cluster_distribution(2, 2, ClusterPair::des_lpk) == lpk);
  CHECK(cluster_distribution(2, 4, ClusterPair::des_pk).second_at_one() == IntPolynomial{0, 1, 22, 58, 24});
  for (int r = 2; r <= 4; ++r)
    for (int k = 1; k <= 5; ++k) {
      const auto d = cluster_distribution(r, k, ClusterPair::des_pk);
      CHECK(d.total() == stirling_cardinality(r, k));
      CHECK(d.column(0) == IntPolynomial::monomial(1, k));  // one peakless member, with k descents
      CHECK(d == stirling_joint_distribution(r, k, StirlingStat::lplat, StirlingStat::ascplat));
      CHECK(cluster_distribution(r, k, ClusterPair::des_lpk) ==
            stirling_joint_distribution(r, k, StirlingStat::lplat, StirlingStat::lascplat));
    }
}
