#include <doctest.h>

#include "cstat/cluster_method.hpp"
#include "cstat/clusters.hpp"
#include "cstat/errors.hpp"

using namespace cstat;

namespace {

const PatternFamily head3{3, Variant::head}, tail3{3, Variant::tail};
const PatternFamily head4{4, Variant::head}, tail4{4, Variant::tail};

}  // namespace

TEST_CASE("pattern families") {
  CHECK(head3.pattern() == Permutation::parse("213"));
  CHECK(tail3.pattern() == Permutation::parse("132"));
  CHECK(head4.pattern() == Permutation::parse("2134"));
  CHECK(tail4.pattern() == Permutation::parse("1243"));
  for (int m = 3; m <= 7; ++m) {
    const PatternFamily h{m, Variant::head}, t{m, Variant::tail};
    CHECK(is_non_overlapping(h.pattern()));
    CHECK(is_non_overlapping(t.pattern()));
    CHECK(reverse_complement(h.pattern()) == t.pattern());
    CHECK(recognize(h.pattern()) == h);
    CHECK(recognize(t.pattern()) == t);
  }
  CHECK_FALSE(recognize(Permutation::parse("123")).has_value());
  CHECK_FALSE(recognize(Permutation::parse("2143")).has_value());
  CHECK(max_occurrences(3, 7) == 3);
  CHECK(stat_shift(Stat::ides) == 1);
  CHECK(stat_shift(Stat::ipk) == 1);
  CHECK(stat_shift(Stat::ilpk) == 0);
}

TEST_CASE("ides examples") {
  const auto a3 = a_ides(3, 6, 0);
  CHECK(a3.avoidance(5) == IntPolynomial{0, 1, 15, 32, 14, 1});
  CHECK(a3.polys[0] == IntBivariate::constant(1));
  const auto a4 = a_ides(4, 6, 0);
  CHECK(a4.avoidance(6) == IntPolynomial{0, 1, 45, 251, 275, 57, 1});
  const auto full = a_ides(3, 4, max_occurrences(3, 4));
  CHECK(full.polys[2] == IntBivariate::from_second(IntPolynomial{0, 1, 1}));
}

TEST_CASE("ipk and ilpk examples") {
  CHECK(p_ipk(3, 5, Variant::head, 0).avoidance(5) == IntPolynomial{0, 5, 48, 10});
  CHECK(p_ipk(4, 5, Variant::tail, 0).avoidance(5) == IntPolynomial{0, 16, 80, 14});
  CHECK(p_ipk(3, 4, Variant::tail, 0).avoidance(4) == IntPolynomial{0, 8, 8});
  CHECK(p_ilpk(3, 6, 0).avoidance(6) == IntPolynomial{1, 87, 187, 21});
  CHECK(p_ilpk(4, 4, 0).avoidance(4) == IntPolynomial{1, 17, 5});
  const auto il = p_ilpk(3, 3, 1);
  CHECK(il.polys[1] == IntBivariate::constant(1));
  CHECK(il.polys[0] == IntBivariate::constant(1));
}

TEST_CASE("variants that coincide") {
  for (int m = 3; m <= 5; ++m) {
    const int N = 8, smax = max_occurrences(m, N);
    CHECK(fast_stat_family({m, Variant::head}, Stat::ides, N, smax).polys ==
          fast_stat_family({m, Variant::tail}, Stat::ides, N, smax).polys);
    CHECK(fast_stat_family({m, Variant::head}, Stat::ilpk, N, smax).polys ==
          fast_stat_family({m, Variant::tail}, Stat::ilpk, N, smax).polys);
  }
}

TEST_CASE("mass and degree bounds") {
  const int N = 10;
  for (int m = 3; m <= 5; ++m)
    for (const auto v : {Variant::head, Variant::tail})
      for (const auto st : {Stat::ides, Stat::ipk, Stat::ilpk}) {
        const auto fam = fast_stat_family({m, v}, st, N, max_occurrences(m, N));
        REQUIRE(fam.polys.size() == static_cast<std::size_t>(N + 1));
        CHECK(fam.polys[0] == IntBivariate::constant(1));
        for (int n = 1; n <= N; ++n) {
          const IntBivariate& p = fam.polys[static_cast<std::size_t>(n)];
          CHECK(p.total() == factorial(static_cast<unsigned>(n)));
          CHECK(p.degree_first() <= max_occurrences(m, n));
          const int tmax = st == Stat::ides ? n : st == Stat::ipk ? (n + 1) / 2 : n / 2;
          CHECK(p.degree_second() <= tmax);
          for (int i = 0; i <= p.degree_first(); ++i)
            for (int j = 0; j <= p.degree_second(); ++j) CHECK(p.coeff(i, j) >= 0);
        }
      }
}

TEST_CASE("fast families equal brute force") {
  const int N = 7;
  for (int m = 3; m <= 4; ++m)
    for (const auto v : {Variant::head, Variant::tail})
      for (const auto st : {Stat::ides, Stat::ipk, Stat::ilpk}) {
        const int smax = max_occurrences(m, N);
        CHECK(fast_stat_family({m, v}, st, N, smax).polys == brute_stat_family({m, v}, st, N, smax).polys);
      }
}

TEST_CASE("brute families") {
  const auto b = brute_stat_family(head3, Stat::ides, 5, 0);
  const auto a = a_ides(3, 5, 0);
  for (int n = 0; n <= 5; ++n) CHECK(b.polys[static_cast<std::size_t>(n)] == a.polys[static_cast<std::size_t>(n)]);
  CHECK(brute_stat_family(head3, Stat::ilpk, 4, 0).avoidance(4) == IntPolynomial{1, 12, 3});
  CHECK(brute_stat_family(tail4, Stat::ipk, 3, 0).avoidance(3) == IntPolynomial{0, 4, 2});
  CHECK_THROWS_AS(brute_stat_family(head3, Stat::ides, 12, 0, 9), ResourceLimit);
}

TEST_CASE("general cluster method") {
  CHECK(verify_gjcm(Permutation::parse("213"), 7).passed());
  CHECK(verify_gjcm(Permutation::parse("123"), 7).passed());
  CHECK(verify_gjcm(Permutation::parse("2134"), 5).passed());
  CHECK(brute_distribution(4, Permutation::parse("213"), Stat::des, 0).row(0).sum() == 16);
  CHECK(enumerate_marked_clusters(Permutation::parse("2134"), 5).empty());
  CHECK(enumerate_marked_clusters(Permutation::parse("2134"), 4).size() == 1);
  CHECK_THROWS_AS(verify_gjcm(Permutation::parse("213"), 9, 8), ResourceLimit);
}
