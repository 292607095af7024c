#include <doctest.h>

#include <random>

#include "cstat/errors.hpp"
#include "cstat/polynomial.hpp"
#include "cstat/series.hpp"

using namespace cstat;

namespace {

TruncSeries random_series(std::mt19937& rng, int X, int T, int S, int xmin) {
  std::uniform_int_distribution<int> d(-5, 5);
  TruncSeries f(X, T, S);
  for (int x = xmin; x <= X; ++x)
    for (int t = 0; t <= T; ++t)
      for (int s = 0; s <= S; ++s) f.at(x, t, s) = Rational(d(rng)) / Rational(1 + std::abs(d(rng)));
  return f;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial a{1, 2}, b{-1, 0, 3};
  CHECK((a * b) == IntPolynomial{-1, -2, 3, 6});
  CHECK((a + b) == IntPolynomial{0, 2, 3});
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(derivative(b) == IntPolynomial{0, 6});
  CHECK(reversed(IntPolynomial{0, 1, 2}, 3) == IntPolynomial{0, 2, 1});
  CHECK(lowest_degree(IntPolynomial{0, 0, 4}) == 2);
  CHECK(b(BigInt(2)) == 11);
  CHECK_THROWS_AS(to_integer(RatPolynomial{Rational(1, 2)}), ConsistencyError);

  IntBivariate p = IntBivariate::monomial(2, 1, 2) + IntBivariate::monomial(1, 0, 0);
  CHECK(p.degree_first() == 1);
  CHECK(p.degree_second() == 2);
  CHECK(partial_second(p) == IntBivariate::monomial(4, 1, 1));
  CHECK((p - p).is_zero());
  CHECK(p.first_at_one() == IntPolynomial{1, 0, 2});
}

TEST_CASE("hadamard power of a worked example") {
  // f = 3xt + t^2/(1 - xs), with s standing in for the second variable.
  const int X = 6, T = 4, S = 6;
  TruncSeries f(X, T, S);
  f.at(1, 1, 0) = 3;
  for (int j = 0; j <= X; ++j) f.at(j, 2, j) = 1;
  for (int n = 1; n <= 4; ++n) {
    const TruncSeries p = hadamard_power(f, n);
    TruncSeries expected(X, T, S);
    if (n <= X) expected.at(n, 1, 0) = Rational(pow(BigInt(3), static_cast<unsigned>(n)));
    for (int j = 0; j <= X; ++j) expected.at(j, 2, j) = Rational(binomial(n + j - 1, j));
    CHECK(p == expected);
  }
  CHECK(hadamard_power(f, 1) == f);
  CHECK(hadamard_power(f, 0) == hadamard_identity(X, T, S));
}

TEST_CASE("term-wise product in t") {
  TruncSeries a(0, 1, 0), b(0, 1, 0);
  a.at(0, 0, 0) = 1;
  a.at(0, 1, 0) = 2;
  b.at(0, 0, 0) = 1;
  b.at(0, 1, 0) = 3;
  const TruncSeries c = hadamard(a, b);
  CHECK(c.at(0, 0, 0) == 1);
  CHECK(c.at(0, 1, 0) == 6);
}

TEST_CASE("algebraic properties on random series") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 5; ++trial) {
    const TruncSeries f = random_series(rng, 4, 3, 2, 1), g = random_series(rng, 4, 3, 2, 0),
                      h = random_series(rng, 4, 3, 2, 0);
    CHECK(((f + g) - g) == f);
    CHECK(hadamard(f, g) == hadamard(g, f));
    CHECK(hadamard(hadamard(f, g), h) == hadamard(f, hadamard(g, h)));
    const TruncSeries c = hadamard_sum_closure(f);
    CHECK(c == hadamard_identity(4, 3, 2) + hadamard(f, c));
    TruncSeries sum = hadamard_identity(4, 3, 2);
    for (int n = 1; n <= 4; ++n) sum += hadamard_power(f, n);
    CHECK(c == sum);
  }
  TruncSeries bad(2, 2, 0);
  bad.at(0, 1, 0) = 1;
  CHECK_THROWS_AS(hadamard_sum_closure(bad), InvalidInput);
}

TEST_CASE("u substitution") {
  const TSeries u = substitute_u(IntPolynomial{0, 1}, 3);
  CHECK(u.to_polynomial() == RatPolynomial{0, 4, -8, 12});
  CHECK(substitute_u(IntPolynomial{1}, 5).to_polynomial() == RatPolynomial{1});
  CHECK(substitute_u(IntPolynomial{0, 0, 1}, 2).to_polynomial() == RatPolynomial{0, 0, 16});

  CHECK(unsubstitute_u(TSeries(RatPolynomial{0, 4, -8, 12, -16}, 4), 1) == IntPolynomial{0, 1});
  CHECK(unsubstitute_u(substitute_u(IntPolynomial{1, 10, 4}, 10), 2) == IntPolynomial{1, 10, 4});
  CHECK_THROWS_AS(unsubstitute_u(TSeries(RatPolynomial{0, 4, -8, 13}, 3), 1), ConsistencyError);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int deg = 0; deg <= 10; ++deg) {
    std::vector<BigInt> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
    const IntPolynomial g(c);
    CHECK(unsubstitute_u(substitute_u(g, 2 * deg + 2), deg) == g);
  }
}

TEST_CASE("divide out") {
  const IntPolynomial p{0, 1, 2};
  const TSeries s = TSeries(p, 6) * TSeries::inverse_one_minus_t_power(3, 6);
  CHECK(divide_out(s, 2) == p);
  const TSeries g = TSeries(p, 10) * TSeries::inverse_one_minus_t_power(5, 10);
  CHECK(divide_out(g, 4) == p);
  TSeries binom(10);
  for (int m = 0; m <= 10; ++m) binom[m] = Rational(binomial(m + 4, 4));
  CHECK(divide_out(binom * TSeries(p, 10), 4) == p);
  CHECK(divide_out(TSeries::inverse_one_minus_t_power(1, 8), 3) == IntPolynomial{1, -3, 3, -1});
  CHECK_THROWS_AS(divide_out(TSeries::inverse_one_minus_t_power(6, 8), 3), ConsistencyError);
  CHECK_THROWS_AS(divide_out(TSeries::one(3), 3), InvalidInput);
}

TEST_CASE("series inverse and powers") {
  const int T = 12;
  for (int k = -4; k <= 4; ++k) {
    CHECK((TSeries::one_plus_t_power(k, T) * TSeries::one_plus_t_power(-k, T)) == TSeries::one(T));
    CHECK((TSeries::one_minus_t_power(k, T) * TSeries::one_minus_t_power(-k, T)) == TSeries::one(T));
  }
  const TSeries a(RatPolynomial{2, 1, Rational(1, 3)}, T);
  CHECK((a * inverse(a)) == TSeries::one(T));
}
