#include "cstat/series.hpp"

#include <algorithm>
#include <string>

#include "cstat/errors.hpp"

namespace cstat {

TSeries::TSeries(int order) : c_(static_cast<std::size_t>(order) + 1, Rational(0)), order_(order) {
  if (order < 0) throw InvalidInput("series order must be non-negative");
}

TSeries::TSeries(const RatPolynomial& p, int order) : TSeries(order) {
  for (int i = 0; i <= std::min(order, p.degree()); ++i) c_[static_cast<std::size_t>(i)] = p.coeff(i);
}

TSeries::TSeries(const IntPolynomial& p, int order) : TSeries(order) {
  for (int i = 0; i <= std::min(order, p.degree()); ++i)
    c_[static_cast<std::size_t>(i)] = Rational(p.coeff(i));
}

TSeries TSeries::one(int order) {
  TSeries s(order);
  s.c_[0] = 1;
  return s;
}

TSeries TSeries::inverse_one_minus_t_power(int k, int order) {
  TSeries s(order);
  if (k == 0) {
    s.c_[0] = 1;
    return s;
  }
  for (int m = 0; m <= order; ++m) s.c_[static_cast<std::size_t>(m)] = Rational(binomial(m + k - 1, k - 1));
  return s;
}

TSeries TSeries::one_plus_t_power(int k, int order) {
  TSeries s(order);
  if (k >= 0) {
    for (int m = 0; m <= std::min(k, order); ++m) s.c_[static_cast<std::size_t>(m)] = Rational(binomial(k, m));
  } else {
    const int j = -k;
    for (int m = 0; m <= order; ++m) {
      Rational c(binomial(m + j - 1, j - 1));
      s.c_[static_cast<std::size_t>(m)] = (m % 2 == 0) ? c : Rational(-c);
    }
  }
  return s;
}

TSeries TSeries::one_minus_t_power(int k, int order) {
  if (k < 0) return inverse_one_minus_t_power(-k, order);
  TSeries s(order);
  for (int m = 0; m <= std::min(k, order); ++m) {
    Rational c(binomial(k, m));
    s.c_[static_cast<std::size_t>(m)] = (m % 2 == 0) ? c : Rational(-c);
  }
  return s;
}

TSeries TSeries::u_series(int order) {
  TSeries s(order);
  for (int j = 1; j <= order; ++j) s.c_[static_cast<std::size_t>(j)] = (j % 2 == 1) ? 4 * j : -4 * j;
  return s;
}

TSeries TSeries::truncated(int order) const {
  if (order > order_) throw InvalidInput("cannot raise the truncation order of a series");
  TSeries s(order);
  std::copy_n(c_.begin(), order + 1, s.c_.begin());
  return s;
}

bool TSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& a) { return a == 0; });
}

TSeries& TSeries::operator+=(const TSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) c_[static_cast<std::size_t>(i)] += o.c_[static_cast<std::size_t>(i)];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) c_[static_cast<std::size_t>(i)] -= o.c_[static_cast<std::size_t>(i)];
  return *this;
}

TSeries& TSeries::operator*=(const Rational& a) {
  for (auto& x : c_) x *= a;
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  const int order = std::min(a.order_, b.order_);
  TSeries c(order);
  for (int i = 0; i <= order; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order; ++j)
      c.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  }
  return c;
}

TSeries inverse(const TSeries& a) {
  if (a[0] == 0) throw InvalidInput("series inverse needs a nonzero constant term");
  TSeries b(a.order());
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (int m = 1; m <= a.order(); ++m) {
    Rational acc(0);
    for (int i = 1; i <= m; ++i) acc += a[i] * b[m - i];
    b[m] = -acc * inv0;
  }
  return b;
}

// ---------------------------------------------------------------------------

TruncSeries::TruncSeries(int xdeg, int tdeg, int sdeg)
    : xdeg_(xdeg), tdeg_(tdeg), sdeg_(sdeg),
      data_(static_cast<std::size_t>(xdeg + 1) * static_cast<std::size_t>(tdeg + 1) *
                static_cast<std::size_t>(sdeg + 1),
            Rational(0)) {
  if (xdeg < 0 || tdeg < 0 || sdeg < 0) throw InvalidInput("truncation orders must be non-negative");
}

TSeries TruncSeries::t_series(int x, int s) const {
  TSeries ts(tdeg_);
  for (int t = 0; t <= tdeg_; ++t) ts[t] = at(x, t, s);
  return ts;
}

void TruncSeries::add_t_series(int x, int s, const TSeries& ts) {
  if (ts.order() < tdeg_) throw InvalidInput("t-series is truncated below the target order");
  for (int t = 0; t <= tdeg_; ++t) at(x, t, s) += ts[t];
}

int TruncSeries::x_order() const {
  for (int x = 0; x <= xdeg_; ++x)
    for (int t = 0; t <= tdeg_; ++t)
      for (int s = 0; s <= sdeg_; ++s)
        if (at(x, t, s) != 0) return x;
  return xdeg_ + 1;
}

void TruncSeries::require_same_shape(const TruncSeries& o) const {
  if (xdeg_ != o.xdeg_ || tdeg_ != o.tdeg_ || sdeg_ != o.sdeg_)
    throw InvalidInput("series truncation orders differ");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

namespace {

// A t-slice is a polynomial in (x, s) stored x-major with (xdeg+1)*(sdeg+1) entries.
void slice_multiply(const Rational* a, const Rational* b, Rational* out, int xdeg, int sdeg) {
  const int w = sdeg + 1;
  for (int i = 0; i < (xdeg + 1) * w; ++i) out[i] = 0;
  for (int x1 = 0; x1 <= xdeg; ++x1)
    for (int s1 = 0; s1 <= sdeg; ++s1) {
      const Rational& av = a[x1 * w + s1];
      if (av == 0) continue;
      for (int x2 = 0; x1 + x2 <= xdeg; ++x2)
        for (int s2 = 0; s1 + s2 <= sdeg; ++s2) out[(x1 + x2) * w + s1 + s2] += av * b[x2 * w + s2];
    }
}

}  // namespace

TruncSeries hadamard_identity(int xdeg, int tdeg, int sdeg) {
  TruncSeries r(xdeg, tdeg, sdeg);
  for (int t = 0; t <= tdeg; ++t) r.at(0, t, 0) = 1;
  return r;
}

TruncSeries hadamard(const TruncSeries& f, const TruncSeries& g) {
  f.require_same_shape(g);
  TruncSeries r(f.xdeg_, f.tdeg_, f.sdeg_);
  const std::size_t slice = static_cast<std::size_t>(f.xdeg_ + 1) * static_cast<std::size_t>(f.sdeg_ + 1);
  for (int t = 0; t <= f.tdeg_; ++t)
    slice_multiply(&f.data_[t * slice], &g.data_[t * slice], &r.data_[t * slice], f.xdeg_, f.sdeg_);
  return r;
}

TruncSeries hadamard_power(const TruncSeries& f, int n) {
  if (n < 0) throw InvalidInput("Hadamard power must be non-negative");
  TruncSeries r = hadamard_identity(f.xdeg_, f.tdeg_, f.sdeg_);
  for (int i = 0; i < n; ++i) r = hadamard(r, f);
  return r;
}

TruncSeries hadamard_sum_closure(const TruncSeries& f) {
  if (f.x_order() < 1) throw InvalidInput("Hadamard closure diverges: series has an x-free monomial");
  const int X = f.xdeg_, S = f.sdeg_, w = S + 1;
  TruncSeries r(X, f.tdeg_, S);
  const std::size_t slice = static_cast<std::size_t>(X + 1) * static_cast<std::size_t>(w);
  // Per t-slice, the closure is the geometric series b = 1 + a b, solved order by order in x.
  for (int t = 0; t <= f.tdeg_; ++t) {
    const Rational* a = &f.data_[t * slice];
    Rational* b = &r.data_[t * slice];
    b[0] = 1;
    for (int x = 1; x <= X; ++x)
      for (int i = 1; i <= x; ++i)
        for (int s1 = 0; s1 <= S; ++s1) {
          const Rational& av = a[i * w + s1];
          if (av == 0) continue;
          for (int s2 = 0; s1 + s2 <= S; ++s2) b[x * w + s1 + s2] += av * b[(x - i) * w + s2];
        }
  }
  return r;
}

// ---------------------------------------------------------------------------

TSeries substitute_u(const RatPolynomial& g, int order) {
  const TSeries u = TSeries::u_series(order);
  TSeries acc(order);
  for (int i = g.degree(); i >= 0; --i) {
    acc = acc * u;
    acc[0] += g.coeff(i);
  }
  return acc;
}

TSeries substitute_u(const IntPolynomial& g, int order) { return substitute_u(cast<Rational>(g), order); }

IntPolynomial unsubstitute_u(const TSeries& h, int dmax) {
  if (dmax < 0) throw InvalidInput("degree bound must be non-negative");
  if (h.order() < 2 * dmax) throw InvalidInput("series too short to invert the u-substitution");
  const TSeries u = TSeries::u_series(h.order());
  TSeries residual = h;
  TSeries upow = TSeries::one(h.order());
  std::vector<Rational> g;
  Rational four_pow(1);
  for (int j = 0; j <= dmax; ++j) {
    // u^j = 4^j t^j + O(t^(j+1)), and lower powers are already eliminated.
    const Rational gj = residual[j] / four_pow;
    g.push_back(gj);
    if (gj != 0) residual -= upow * gj;
    upow = upow * u;
    four_pow *= 4;
  }
  if (!residual.is_zero()) {
    for (int i = 0; i <= residual.order(); ++i)
      if (residual[i] != 0)
        throw ConsistencyError("u-substitution residual nonzero at t^" + std::to_string(i) +
                               " (degree bound " + std::to_string(dmax) + ")");
  }
  return to_integer(RatPolynomial(std::move(g)));
}

IntPolynomial divide_out(const TSeries& series, int n) {
  if (n < 0) throw InvalidInput("divide_out needs n >= 0");
  if (series.order() < 2 * n + 2) throw InvalidInput("series too short for divide_out");
  const TSeries product = series * TSeries::one_minus_t_power(n + 1, series.order());
  for (int i = n + 2; i <= product.order(); ++i)
    if (product[i] != 0)
      throw ConsistencyError("divide_out: tail coefficient at t^" + std::to_string(i) + " is " +
                             to_string(product[i]));
  return to_integer(product.truncated(n + 1).to_polynomial());
}

}  // namespace cstat
