#include <doctest.h>

#include "cstat/clusters.hpp"
#include "cstat/errors.hpp"
#include "cstat/recurrences.hpp"
#include "cstat/stirling.hpp"

using namespace cstat;

namespace {

IntBivariate bivar(std::initializer_list<std::tuple<int, int, long>> terms) {
  IntBivariate b;
  for (const auto& [i, j, c] : terms) b.add_to(i, j, BigInt(c));
  return b;
}

}  // namespace

TEST_CASE("stat matrix examples") {
  CHECK(stat_matrix(2, 3, MatrixKind::p).entries.second_at_one() == IntPolynomial{0, 1, 8, 6});
  for (int r = 2; r <= 5; ++r) CHECK(stat_matrix(r, 1, MatrixKind::p).entries == bivar({{1, 0, 1}}));
  CHECK(stat_matrix(2, 2, MatrixKind::p).entries == bivar({{1, 1, 1}, {2, 0, 1}, {2, 1, 1}}));
  CHECK(stat_matrix(2, 2, MatrixKind::p).entries == cluster_distribution(2, 2, ClusterPair::des_pk));
  CHECK(stat_matrix(3, 1, MatrixKind::p_tilde).entries == bivar({{1, 1, 1}}));
  CHECK_THROWS_AS(stat_matrix(1, 3, MatrixKind::p), InvalidInput);
  CHECK_THROWS_AS(stat_matrix(2, 0, MatrixKind::q), InvalidInput);
  CHECK(parse_matrix_kind("q") == MatrixKind::q);
  CHECK_THROWS_AS(parse_matrix_kind("z"), InvalidInput);
}

TEST_CASE("stat matrix invariants") {
  for (int r = 2; r <= 5; ++r)
    for (const auto kind : {MatrixKind::p, MatrixKind::q, MatrixKind::p_tilde, MatrixKind::q_tilde}) {
      const auto ms = stat_matrices(r, 8, kind);
      REQUIRE(ms.size() == 8);
      for (int k = 1; k <= 8; ++k) {
        const IntBivariate& e = ms[static_cast<std::size_t>(k - 1)].entries;
        CHECK(e.total() == stirling_cardinality(r, k));
        for (int i = 0; i <= e.degree_first(); ++i)
          for (int j = 0; j <= e.degree_second(); ++j) CHECK(e.coeff(i, j) >= 0);
        if (kind == MatrixKind::p || kind == MatrixKind::q) {
          for (int j = 0; j <= e.degree_second(); ++j) CHECK(e.coeff(0, j) == 0);
          for (int i = 0; i <= e.degree_first(); ++i) CHECK(e.coeff(i, 0) == (i == k ? 1 : 0));
        }
      }
    }
}

TEST_CASE("p equals q and marginals match the univariate families") {
  for (int r = 2; r <= 5; ++r)
    for (int k = 1; k <= 10; ++k) {
      const auto p = stat_matrix(r, k, MatrixKind::p).entries;
      const auto pt = stat_matrix(r, k, MatrixKind::p_tilde).entries;
      CHECK(p == stat_matrix(r, k, MatrixKind::q).entries);
      CHECK(pt == stat_matrix(r, k, MatrixKind::q_tilde).entries);
      CHECK(p == c_bivar(r, k, false));
      CHECK(pt == c_bivar(r, k, true));
      CHECK(p.second_at_one() == c_univar(r, k, Family::des));
      CHECK(p.first_at_one() == c_univar(r, k, Family::pk));
      CHECK(pt.first_at_one() == c_univar(r, k, Family::lpk));
    }
}

TEST_CASE("matrices agree with enumeration") {
  for (int r = 2; r <= 3; ++r)
    for (int k = 1; k <= 4; ++k) {
      CHECK(stat_matrix(r, k, MatrixKind::p).entries == cluster_distribution(r, k, ClusterPair::des_pk));
      CHECK(stat_matrix(r, k, MatrixKind::p_tilde).entries == cluster_distribution(r, k, ClusterPair::des_lpk));
      CHECK(stat_matrix(r, k, MatrixKind::q).entries ==
            stirling_joint_distribution(r, k, StirlingStat::lplat, StirlingStat::ascplat));
      CHECK(stat_matrix(r, k, MatrixKind::q_tilde).entries ==
            stirling_joint_distribution(r, k, StirlingStat::lplat, StirlingStat::lascplat));
    }
}

TEST_CASE("bivariate examples") {
  CHECK(c_bivar(2, 2, false) == bivar({{2, 0, 1}, {2, 1, 1}, {1, 1, 1}}));
  CHECK(c_bivar(2, 2, true) == bivar({{1, 1, 1}, {2, 1, 1}, {2, 2, 1}}));
  CHECK(c_bivar(3, 2, false).second_at_one() == IntPolynomial{0, 1, 3});
  CHECK(c_bivar(4, 1, false) == bivar({{1, 0, 1}}));
  CHECK(c_bivar(4, 1, true) == bivar({{1, 1, 1}}));
}

TEST_CASE("univariate examples") {
  CHECK(c_univar(2, 5, Family::des) == IntPolynomial{0, 1, 52, 328, 444, 120});
  CHECK(c_univar(3, 4, Family::pk) == IntPolynomial{1, 54, 165, 60});
  CHECK(c_univar(2, 3, Family::lpk) == IntPolynomial{0, 4, 10, 1});
  const auto seq = c_univar_sequence(3, 6, Family::des);
  REQUIRE(seq.size() == 6);
  for (int k = 1; k <= 6; ++k) CHECK(seq[static_cast<std::size_t>(k - 1)] == c_univar(3, k, Family::des));
  CHECK(parse_family("cpk") == Family::pk);
  CHECK(parse_family("lpk") == Family::lpk);
  CHECK(family_name(Family::des) == "des");
}

TEST_CASE("lpk at r=2 reverses pk") {
  for (int k = 1; k <= 12; ++k) CHECK(c_univar(2, k, Family::lpk) == reversed(c_univar(2, k, Family::pk), k));
}

TEST_CASE("closed products") {
  CHECK(closed_product(3, 4, ClosedProduct::pk_leading) == 60);
  for (int k = 1; k <= 10; ++k) CHECK(closed_product(2, k, ClosedProduct::pk_leading) == pow(BigInt(2), k - 1));
  for (int r = 2; r <= 6; ++r) {
    CHECK(closed_product(r, 1, ClosedProduct::cardinality) == 1);
    CHECK(closed_product(r, 1, ClosedProduct::lpk_leading_conj) == 1);
    for (int k = 1; k <= 20; ++k) {
      CHECK(c_univar(r, k, Family::pk).leading() == closed_product(r, k, ClosedProduct::pk_leading));
      CHECK(c_univar(r, k, Family::des).sum() == closed_product(r, k, ClosedProduct::cardinality));
    }
  }
}

TEST_CASE("exponential generating function checks") {
  for (int r : {2, 3}) {
    const Report rep = egf_check(r, 4);
    CHECK(rep.passed());
    CHECK(!rep.items.empty());
  }
  CHECK(egf_check(2, 1).passed());
  CHECK_THROWS_AS(egf_check(2, 0), InvalidInput);
}
