#include <doctest.h>

#include <algorithm>
#include <random>

#include "cstat/analysis.hpp"
#include "cstat/errors.hpp"
#include "cstat/recurrences.hpp"

using namespace cstat;

namespace {

IntPolynomial from_roots(const std::vector<int>& roots) {
  IntPolynomial p{1};
  for (int a : roots) p *= IntPolynomial{-a, 1};
  return p;
}

// Root-order oracle on sorted integer roots: equal degrees need a1<=b1<=a2<=...<=bn,
// and deg f = deg g + 1 needs b1<=a1<=b2<=...<=a_{n-1}<=b_n.
bool interlace_oracle(std::vector<int> g, std::vector<int> f) {
  std::sort(g.begin(), g.end());
  std::sort(f.begin(), f.end());
  std::vector<int> merged;
  if (g.size() == f.size()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      merged.push_back(g[i]);
      merged.push_back(f[i]);
    }
  } else if (f.size() == g.size() + 1) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      merged.push_back(f[i]);
      merged.push_back(g[i]);
    }
    merged.push_back(f.back());
  } else {
    return g.empty();
  }
  return std::is_sorted(merged.begin(), merged.end());
}

}  // namespace

TEST_CASE("exact algebra helpers") {
  CHECK(primitive_part(IntPolynomial{-4, 0, -2}) == IntPolynomial{2, 0, 1});
  CHECK(primitive_part(RatPolynomial{Rational(1, 2), Rational(1, 3)}) == IntPolynomial{3, 2});
  CHECK(poly_gcd(from_roots({1, 2, 3}), from_roots({2, 3, 4})) == from_roots({2, 3}));
  CHECK(squarefree_part(from_roots({1, 1, 2})) == from_roots({1, 2}));
  const auto fac = squarefree_factors(from_roots({1, 2, 2, 3, 3, 3}));
  REQUIRE(fac.size() == 3);
  CHECK(fac[0] == from_roots({1}));
  CHECK(fac[1] == from_roots({2}));
  CHECK(fac[2] == from_roots({3}));
  CHECK(count_real_roots(from_roots({-3, 0, 5})) == 3);
  CHECK(count_real_roots(IntPolynomial{1, 0, 1}) == 0);
  CHECK(count_real_roots(IntPolynomial{-2, 0, 1}) == 2);
}

TEST_CASE("real-rootedness examples") {
  CHECK(is_real_rooted(IntPolynomial{0, 1, 8, 6}));
  CHECK_FALSE(is_real_rooted(IntPolynomial{1, 1, 1}));
  CHECK(is_real_rooted(c_univar(2, 7, Family::des)));
  CHECK(is_real_rooted(IntPolynomial{5}));
  CHECK(is_real_rooted(from_roots({-1, -1, -1, 0, 0})));
  CHECK_FALSE(is_real_rooted(IntPolynomial{0, 0, 1, 0, 1}));
}

TEST_CASE("interlacing examples") {
  CHECK(interlaces(c_univar(2, 3, Family::pk), c_univar(2, 4, Family::pk)));
  CHECK(interlaces(IntPolynomial{0, 1}, IntPolynomial{-1, 0, 1}));
  CHECK(interlaces(IntPolynomial{1}, IntPolynomial{3, 1}));
  CHECK(interlaces(IntPolynomial{}, IntPolynomial{3, 1}));
  CHECK(interlaces(IntPolynomial{3, 1}, IntPolynomial{}));
  CHECK_FALSE(interlaces(from_roots({0, 1}), IntPolynomial{0, 1}));
  CHECK_FALSE(interlaces(IntPolynomial{1}, from_roots({1, 2})));
  CHECK_THROWS_AS(interlaces(IntPolynomial{1, 1, 1}, from_roots({1, 2, 3})), InvalidInput);
  CHECK_THROWS_AS(interlaces(IntPolynomial{1}, IntPolynomial{1, -1}), InvalidInput);
}

TEST_CASE("interlacing agrees with the root-order oracle") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> root(-4, 4), deg(1, 4), extra(0, 1);
  int agreed_true = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> g(static_cast<std::size_t>(deg(rng))), f(g.size() + static_cast<std::size_t>(extra(rng)));
    for (auto& a : g) a = root(rng);
    for (auto& a : f) a = root(rng);
    const bool expected = interlace_oracle(g, f);
    agreed_true += expected;
    INFO("g roots size " << g.size() << ", f roots size " << f.size());
    CHECK(interlaces(from_roots(g), from_roots(f)) == expected);
  }
  CHECK(agreed_true > 20);
}

TEST_CASE("generalized Sturm sequences for the cluster families") {
  for (int r = 2; r <= 3; ++r)
    for (const auto fam : {Family::des, Family::pk, Family::lpk}) {
      const auto seq = c_univar_sequence(r, 9, fam);
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        CHECK(is_real_rooted(seq[i]));
        CHECK(interlaces(seq[i], seq[i + 1]));
      }
    }
}

TEST_CASE("shape examples") {
  const Shape a = shape_checks(IntPolynomial{0, 1, 22, 58, 24});
  CHECK(a.unimodal);
  CHECK(a.log_concave);
  CHECK(a.modes == std::vector<int>{3});
  const Shape b = shape_checks(IntPolynomial{1, 1, 1});
  CHECK(b.unimodal);
  CHECK(b.log_concave);
  CHECK(b.modes == std::vector<int>{0, 1, 2});
  CHECK_FALSE(shape_checks(IntPolynomial{1, 3, 1, 3}).unimodal);
  CHECK_THROWS_AS(shape_checks(IntPolynomial{1, -1}), InvalidInput);
}

TEST_CASE("moment examples") {
  CHECK(moments(c_univar(2, 3, Family::des)).mean == Rational(7, 3));
  CHECK(moments(c_univar(2, 3, Family::pk)).mean == Rational(6, 5));
  CHECK(moments(c_univar(2, 3, Family::lpk)).mean == Rational(9, 5));
  CHECK(moments(IntPolynomial{0, 0, 7}).variance == 0);
  CHECK_THROWS_AS(moments(IntPolynomial{}), InvalidInput);
  const MomentSummary sym = moments(IntPolynomial{1, 2, 1});
  CHECK(sym.mean == 1);
  CHECK(sym.variance == Rational(1, 2));
  CHECK(sym.std3 == doctest::Approx(0.0));
  CHECK(sym.std4 == doctest::Approx(2.0));
}

TEST_CASE("means from the growth recurrence") {
  CHECK(mean_via_recurrence(2, 5, Family::pk)[2] == Rational(6, 5));
  CHECK(mean_via_recurrence(2, 3, Family::des)[2] == Rational(7, 3));
  CHECK(c_univar(3, 4, Family::lpk) == IntPolynomial{0, 8, 104, 144, 24});
  CHECK(mean_via_recurrence(3, 4, Family::lpk)[3] == Rational(93, 35));
  CHECK(mean_via_recurrence(3, 4, Family::lpk)[3] == moments(c_univar(3, 4, Family::lpk)).mean);
  for (int r = 2; r <= 5; ++r)
    for (const auto fam : {Family::des, Family::pk, Family::lpk}) {
      const auto mu = mean_via_recurrence(r, 25, fam);
      for (int k = 1; k <= 25; ++k) {
        const Rational exact = moments(c_univar(r, k, fam)).mean;
        CHECK(mu[static_cast<std::size_t>(k - 1)] == exact);
        if (fam == Family::des) CHECK(exact == des_mean_closed(r, k));
        if (fam == Family::pk && r == 2) CHECK(exact == pk_mean_closed_r2(k));
        if (fam == Family::lpk && r == 2) CHECK(exact == lpk_mean_closed_r2(k));
        if (fam != Family::des) CHECK(gamma_mean(r, k, fam) == doctest::Approx(exact.get_d()).epsilon(1e-9));
      }
    }
}

TEST_CASE("Stirling numbers of the second kind and the des identity") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(3, 0) == 0);
  CHECK(gessel_stanley_check(2, 2).passed());
  CHECK(gessel_stanley_check(1, 3).passed());
  for (int k = 1; k <= 6; ++k) CHECK(gessel_stanley_check(k, 12).passed());
}

TEST_CASE("normality trend") {
  CHECK(normality_trend(2, Family::des, {12, 50, 120}).passed());
  CHECK(normality_trend(3, Family::pk, {12, 50, 120}).passed());
}

TEST_CASE("conjecture examples") {
  CHECK(c_univar(3, 4, Family::pk).coeff(1) == 54);
  CHECK(fibonacci(8) - 5 - 2 == 14);
  CHECK(parse_conjecture("fib-ides") == Conjecture::fib_ides);
  CHECK(conjecture_name(Conjecture::lin_cpk) == "lin-cpk");
  CHECK_THROWS_AS(parse_conjecture("nope"), InvalidInput);
  ConjectureBounds small;
  small.rmax = 6;
  small.kmax = 8;
  small.k3max = 8;
  small.fib_nmax = 10;
  small.mmax = 4;
  small.ipk_nmax = 10;
  small.roots_mmax = 4;
  small.roots_nmax = 8;
  for (const auto c : {Conjecture::lin_cpk, Conjecture::k_clpk, Conjecture::k1_clpk, Conjecture::fib_ides,
                       Conjecture::ipk_linear, Conjecture::real_roots}) {
    const Report rep = check_conjecture(c, small);
    CHECK(rep.passed());
    CHECK(!rep.items.empty());
  }
  CHECK(!check_conjecture(Conjecture::real_roots, small).notes.empty());
}
