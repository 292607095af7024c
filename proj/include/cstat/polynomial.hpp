#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "cstat/errors.hpp"
#include "cstat/numeric.hpp"

namespace cstat {

/// Dense univariate polynomial with coefficients in ascending order of degree.
/// The zero polynomial has no stored coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  using scalar_type = T;

  Polynomial() = default;
  Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static Polynomial constant(const T& a) { return Polynomial(std::vector<T>{a}); }

  static Polynomial monomial(const T& a, int e) {
    std::vector<T> c(static_cast<std::size_t>(e) + 1, T(0));
    c[static_cast<std::size_t>(e)] = a;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : T(0);
  }

  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  void set(int i, const T& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, T(0));
    c_[static_cast<std::size_t>(i)] = v;
    trim();
  }

  void add_to(int i, const T& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, T(0));
    c_[static_cast<std::size_t>(i)] += v;
    trim();
  }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = T(acc * x + *it);
    return acc;
  }

  T sum() const {
    T acc(0);
    for (const auto& a : c_) acc += a;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const T& a) {
    for (auto& x : c_) x *= a;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  std::vector<T> c;
  for (int i = 1; i <= p.degree(); ++i) c.push_back(T(p.coeff(i) * i));
  return Polynomial<T>(std::move(c));
}

/// p(t) * t^k.
template <class T>
Polynomial<T> shift_up(const Polynomial<T>& p, int k) {
  if (p.is_zero()) return p;
  std::vector<T> c(static_cast<std::size_t>(k), T(0));
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return Polynomial<T>(std::move(c));
}

/// t^d p(1/t); requires d >= deg p.
template <class T>
Polynomial<T> reversed(const Polynomial<T>& p, int d) {
  if (d < p.degree()) throw InvalidInput("reversed: degree offset below polynomial degree");
  std::vector<T> c(static_cast<std::size_t>(d) + 1, T(0));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(d - i)] = p.coeff(i);
  return Polynomial<T>(std::move(c));
}

/// Lowest exponent with a nonzero coefficient (-1 for the zero polynomial).
template <class T>
int lowest_degree(const Polynomial<T>& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) return i;
  return -1;
}

template <class U, class T>
Polynomial<U> cast(const Polynomial<T>& p) {
  std::vector<U> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.push_back(U(a));
  return Polynomial<U>(std::move(c));
}

inline IntPolynomial to_integer(const RatPolynomial& p) {
  std::vector<BigInt> c;
  for (const auto& a : p.coeffs()) {
    if (!is_integral(a)) throw ConsistencyError("non-integral coefficient " + to_string(a));
    c.push_back(a.get_num());
  }
  return IntPolynomial(std::move(c));
}

/// Dense polynomial in two variables. Coefficient (i, j) multiplies a^i b^j,
/// where a is the "first" and b the "second" variable. The stored box is tight.
template <class T>
class Bivariate {
 public:
  using scalar_type = T;

  Bivariate() = default;

  explicit Bivariate(std::vector<std::vector<T>> rows) : c_(std::move(rows)) { normalize(); }

  static Bivariate constant(const T& a) { return Bivariate({{a}}); }

  static Bivariate monomial(const T& a, int i, int j) {
    Bivariate b;
    b.set(i, j, a);
    return b;
  }

  /// Embeds a univariate polynomial in the first (or second) variable.
  static Bivariate from_first(const Polynomial<T>& p) {
    std::vector<std::vector<T>> rows;
    for (const auto& a : p.coeffs()) rows.push_back({a});
    return Bivariate(std::move(rows));
  }

  static Bivariate from_second(const Polynomial<T>& p) { return Bivariate({p.coeffs()}); }

  bool is_zero() const { return c_.empty(); }
  int degree_first() const { return static_cast<int>(c_.size()) - 1; }
  int degree_second() const { return c_.empty() ? -1 : static_cast<int>(c_[0].size()) - 1; }
  const std::vector<std::vector<T>>& rows() const { return c_; }

  T coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > degree_first() || j > degree_second()) return T(0);
    return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  void set(int i, int j, const T& v) {
    grow(i, j);
    c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    normalize();
  }

  void add_to(int i, int j, const T& v) {
    grow(i, j);
    c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += v;
    normalize();
  }

  /// Coefficient of a^i as a polynomial in b.
  Polynomial<T> row(int i) const {
    if (i < 0 || i > degree_first()) return {};
    return Polynomial<T>(c_[static_cast<std::size_t>(i)]);
  }

  /// Coefficient of b^j as a polynomial in a.
  Polynomial<T> column(int j) const {
    std::vector<T> c;
    for (const auto& r : c_) c.push_back(j <= degree_second() ? r[static_cast<std::size_t>(j)] : T(0));
    return Polynomial<T>(std::move(c));
  }

  /// Sets the second variable to 1.
  Polynomial<T> second_at_one() const {
    std::vector<T> c;
    for (const auto& r : c_) {
      T s(0);
      for (const auto& a : r) s += a;
      c.push_back(s);
    }
    return Polynomial<T>(std::move(c));
  }

  /// Sets the first variable to 1.
  Polynomial<T> first_at_one() const {
    std::vector<T> c(static_cast<std::size_t>(degree_second() + 1), T(0));
    for (const auto& r : c_)
      for (std::size_t j = 0; j < r.size(); ++j) c[j] += r[j];
    return Polynomial<T>(std::move(c));
  }

  T total() const {
    T s(0);
    for (const auto& r : c_)
      for (const auto& a : r) s += a;
    return s;
  }

  Bivariate& operator+=(const Bivariate& o) {
    if (o.is_zero()) return *this;
    grow(o.degree_first(), o.degree_second());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_[i].size(); ++j) c_[i][j] += o.c_[i][j];
    normalize();
    return *this;
  }

  Bivariate& operator-=(const Bivariate& o) {
    if (o.is_zero()) return *this;
    grow(o.degree_first(), o.degree_second());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_[i].size(); ++j) c_[i][j] -= o.c_[i][j];
    normalize();
    return *this;
  }

  Bivariate& operator*=(const T& a) {
    for (auto& r : c_)
      for (auto& x : r) x *= a;
    normalize();
    return *this;
  }

  friend Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
  friend Bivariate operator-(Bivariate a, const Bivariate& b) { return a -= b; }
  friend Bivariate operator*(Bivariate a, const T& s) { return a *= s; }
  friend Bivariate operator*(const T& s, Bivariate a) { return a *= s; }

  friend Bivariate operator*(const Bivariate& a, const Bivariate& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t ni = a.c_.size() + b.c_.size() - 1;
    const std::size_t nj = a.c_[0].size() + b.c_[0].size() - 1;
    std::vector<std::vector<T>> c(ni, std::vector<T>(nj, T(0)));
    for (std::size_t i1 = 0; i1 < a.c_.size(); ++i1)
      for (std::size_t j1 = 0; j1 < a.c_[i1].size(); ++j1) {
        if (a.c_[i1][j1] == 0) continue;
        for (std::size_t i2 = 0; i2 < b.c_.size(); ++i2)
          for (std::size_t j2 = 0; j2 < b.c_[i2].size(); ++j2)
            c[i1 + i2][j1 + j2] += a.c_[i1][j1] * b.c_[i2][j2];
      }
    return Bivariate(std::move(c));
  }

  Bivariate& operator*=(const Bivariate& o) { return *this = *this * o; }

  friend bool operator==(const Bivariate& a, const Bivariate& b) { return a.c_ == b.c_; }

 private:
  void grow(int i, int j) {
    const std::size_t rows = std::max(c_.size(), static_cast<std::size_t>(i) + 1);
    const std::size_t cols =
        std::max(c_.empty() ? std::size_t{0} : c_[0].size(), static_cast<std::size_t>(j) + 1);
    c_.resize(rows);
    for (auto& r : c_) r.resize(cols, T(0));
  }

  void normalize() {
    std::size_t cols = 0;
    for (const auto& r : c_)
      for (std::size_t j = r.size(); j > cols; --j)
        if (r[j - 1] != 0) {
          cols = j;
          break;
        }
    std::size_t rows = c_.size();
    while (rows > 0) {
      const auto& r = c_[rows - 1];
      if (std::any_of(r.begin(), r.end(), [](const T& x) { return x != 0; })) break;
      --rows;
    }
    if (cols == 0) rows = 0;
    c_.resize(rows);
    for (auto& r : c_) r.resize(cols, T(0));
  }

  std::vector<std::vector<T>> c_;
};

using IntBivariate = Bivariate<BigInt>;
using RatBivariate = Bivariate<Rational>;

template <class T>
Bivariate<T> partial_first(const Bivariate<T>& p) {
  Bivariate<T> d;
  for (int i = 1; i <= p.degree_first(); ++i)
    for (int j = 0; j <= p.degree_second(); ++j)
      if (p.coeff(i, j) != 0) d.set(i - 1, j, T(p.coeff(i, j) * i));
  return d;
}

template <class T>
Bivariate<T> partial_second(const Bivariate<T>& p) {
  Bivariate<T> d;
  for (int i = 0; i <= p.degree_first(); ++i)
    for (int j = 1; j <= p.degree_second(); ++j)
      if (p.coeff(i, j) != 0) d.set(i, j - 1, T(p.coeff(i, j) * j));
  return d;
}

template <class U, class T>
Bivariate<U> cast(const Bivariate<T>& p) {
  std::vector<std::vector<U>> rows;
  for (const auto& r : p.rows()) {
    std::vector<U> row;
    for (const auto& a : r) row.push_back(U(a));
    rows.push_back(std::move(row));
  }
  return Bivariate<U>(std::move(rows));
}

}  // namespace cstat
