#include <doctest.h>

#include <algorithm>
#include <set>

#include "cstat/errors.hpp"
#include "cstat/stirling.hpp"

using namespace cstat;

namespace {

// All r-Stirling permutations by filtering every arrangement of the multiset.
std::set<std::vector<int>> filtered(int r, int k) {
  std::vector<int> w;
  for (int a = 1; a <= k; ++a) w.insert(w.end(), static_cast<std::size_t>(r), a);
  std::set<std::vector<int>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i)
      for (std::size_t j = i + 1; j < w.size() && ok; ++j)
        if (w[i] == w[j])
          for (std::size_t l = i + 1; l < j; ++l)
            if (w[l] < w[i]) ok = false;
    if (ok) out.insert(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> word(const char* s) {
  std::vector<int> w;
  for (; *s; ++s) w.push_back(*s - '0');
  return w;
}

}  // namespace

TEST_CASE("validity") {
  CHECK(is_valid_stirling(word("112223444331"), 3, 4));
  CHECK_FALSE(is_valid_stirling(word("123244433211"), 3, 4));
  CHECK(is_valid_stirling(word("1111"), 4, 1));
  CHECK_FALSE(is_valid_stirling(word("1122"), 3, 2));
  CHECK_THROWS_AS(StirlingPermutation(word("1212"), 2, 2), InvalidInput);
}

TEST_CASE("enumeration matches filtering") {
  for (int r = 1; r <= 3; ++r)
    for (int k = 0; k <= (r == 1 ? 5 : 4); ++k) {
      if (r * k > 10) continue;
      std::set<std::vector<int>> seen;
      std::size_t count = 0;
      for_each_stirling(r, k, [&](const std::vector<int>& w) {
        REQUIRE(is_valid_stirling(w, r, k));
        seen.insert(w);
        ++count;
      });
      CHECK(count == seen.size());
      CHECK(seen == filtered(r, k));
      CHECK(BigInt(static_cast<long>(count)) == stirling_cardinality(r, k));
    }
}

TEST_CASE("small cases") {
  const auto q = enumerate_stirling(2, 2);
  std::set<std::string> s;
  for (const auto& p : q) s.insert(p.to_string());
  CHECK(s == std::set<std::string>{"1122", "1221", "2211"});
  CHECK(enumerate_stirling(5, 1).size() == 1);
  CHECK(enumerate_stirling(2, 3).size() == 15);
  CHECK_THROWS_AS(enumerate_stirling(4, 9, 1000), ResourceLimit);
}

TEST_CASE("plateau statistics") {
  CHECK(stirling_stat(word("1122"), StirlingStat::lplat) == 2);
  CHECK(stirling_stat(word("1221"), StirlingStat::lplat) == 1);
  CHECK(stirling_stat(word("1122"), StirlingStat::ascplat) == 1);
  CHECK(stirling_stat(word("1122"), StirlingStat::lascplat) == 2);
  CHECK(stirling_stat(word("111"), StirlingStat::plat) == 2);
  CHECK(stirling_stat(word("1221"), StirlingStat::des) == 2);
}

TEST_CASE("distributions") {
  const IntBivariate c22 = stirling_joint_distribution(2, 2, StirlingStat::lplat, StirlingStat::ascplat);
  IntBivariate expected;
  expected.set(2, 0, 1);
  expected.set(2, 1, 1);
  expected.set(1, 1, 1);
  CHECK(c22 == expected);
  CHECK(stirling_distribution(2, 3, StirlingStat::lplat) == IntPolynomial{0, 1, 8, 6});
  CHECK(stirling_distribution(3, 2, StirlingStat::des) == IntPolynomial{0, 1, 3});
}

TEST_CASE("equidistribution and ordering properties") {
  for (int r = 1; r <= 4; ++r)
    for (int k = 1; k <= 5; ++k) {
      if (r >= 2)
        CHECK(stirling_distribution(r, k, StirlingStat::des) == stirling_distribution(r, k, StirlingStat::lplat));
      for_each_stirling(r, k, [&](const std::vector<int>& w) {
        const int a = stirling_stat(w, StirlingStat::ascplat), l = stirling_stat(w, StirlingStat::lplat),
                  p = stirling_stat(w, StirlingStat::plat);
        REQUIRE(a <= l);
        REQUIRE(l <= p);
      });
    }
  for (int k = 1; k <= 6; ++k)
    CHECK(stirling_distribution(2, k, StirlingStat::plat) == stirling_distribution(2, k, StirlingStat::lplat));
}
