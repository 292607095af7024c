#pragma once

#include <vector>

#include "cstat/numeric.hpp"
#include "cstat/polynomial.hpp"

namespace cstat {

/// Power series in t over the rationals, known exactly through t^order.
/// Binary operations keep the smaller of the two orders.
class TSeries {
 public:
  TSeries() = default;
  explicit TSeries(int order);
  TSeries(const RatPolynomial& p, int order);
  TSeries(const IntPolynomial& p, int order);

  static TSeries one(int order);
  /// 1/(1 - t)^k.
  static TSeries inverse_one_minus_t_power(int k, int order);
  /// (1 + t)^k for k >= 0 and its series inverse for k < 0.
  static TSeries one_plus_t_power(int k, int order);
  /// (1 - t)^k for k >= 0 and its series inverse for k < 0.
  static TSeries one_minus_t_power(int k, int order);
  /// u(t) = 4t/(1+t)^2.
  static TSeries u_series(int order);

  int order() const { return order_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Drops coefficients above t^order; order may only stay or decrease.
  TSeries truncated(int order) const;
  RatPolynomial to_polynomial() const { return RatPolynomial(c_); }
  bool is_zero() const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const Rational& a);

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(TSeries a, const Rational& s) { return a *= s; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend bool operator==(const TSeries& a, const TSeries& b) = default;

 private:
  std::vector<Rational> c_;
  int order_ = -1;
};

/// Multiplicative inverse of a series with nonzero constant term.
TSeries inverse(const TSeries& a);

/// Power series in x, t and s truncated at x^xdeg, t^tdeg, s^sdeg, exact rationals.
/// The t variable is the one the Hadamard product acts on; x and s multiply ordinarily.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(int xdeg, int tdeg, int sdeg);

  int xdeg() const { return xdeg_; }
  int tdeg() const { return tdeg_; }
  int sdeg() const { return sdeg_; }

  const Rational& at(int x, int t, int s) const { return data_[index(x, t, s)]; }
  Rational& at(int x, int t, int s) { return data_[index(x, t, s)]; }

  /// Coefficient of x^x s^s as a series in t.
  TSeries t_series(int x, int s) const;
  /// Adds a t-series into the x^x s^s slot; the series must reach tdeg.
  void add_t_series(int x, int s, const TSeries& ts);

  /// Lowest x exponent carrying a nonzero coefficient, or xdeg+1 if the series vanishes.
  int x_order() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  friend TruncSeries hadamard(const TruncSeries&, const TruncSeries&);
  friend TruncSeries hadamard_power(const TruncSeries&, int);
  friend TruncSeries hadamard_sum_closure(const TruncSeries&);

  std::size_t index(int x, int t, int s) const {
    return (static_cast<std::size_t>(t) * static_cast<std::size_t>(xdeg_ + 1) +
            static_cast<std::size_t>(x)) *
               static_cast<std::size_t>(sdeg_ + 1) +
           static_cast<std::size_t>(s);
  }
  void require_same_shape(const TruncSeries& o) const;

  int xdeg_ = 0, tdeg_ = 0, sdeg_ = 0;
  std::vector<Rational> data_;
};

/// Identity of the Hadamard product: sum over m of t^m.
TruncSeries hadamard_identity(int xdeg, int tdeg, int sdeg);
/// Term-wise product in t; both operands must share truncation orders.
TruncSeries hadamard(const TruncSeries& f, const TruncSeries& g);
TruncSeries hadamard_power(const TruncSeries& f, int n);
/// Sum over n >= 0 of the n-fold Hadamard powers of f. Requires every monomial of f
/// to carry x, so only n <= xdeg contribute.
TruncSeries hadamard_sum_closure(const TruncSeries& f);

/// g(4t/(1+t)^2) expanded through t^order.
TSeries substitute_u(const IntPolynomial& g, int order);
TSeries substitute_u(const RatPolynomial& g, int order);

/// Recovers g of degree <= dmax from h = g(4t/(1+t)^2). Throws ConsistencyError when
/// h is not in the image or g is not integral.
IntPolynomial unsubstitute_u(const TSeries& h, int dmax);

/// Multiplies a series by (1-t)^(n+1) and returns the resulting polynomial of degree <= n+1,
/// asserting that the tail vanishes through the series order and that all coefficients are integers.
IntPolynomial divide_out(const TSeries& series, int n);

}  // namespace cstat
