// Truncated exponential generating functions in x with coefficients in Q[t, y].
#include <functional>
#include <string>

#include "cstat/errors.hpp"
#include "cstat/recurrences.hpp"
#include "cstat/stirling.hpp"

namespace cstat {

namespace {

// Coefficients of x^0..x^K.
using XSeries = std::vector<RatBivariate>;

XSeries zeros(int K) { return XSeries(static_cast<std::size_t>(K) + 1); }

XSeries add(const XSeries& a, const XSeries& b) {
  XSeries c(a);
  for (std::size_t n = 0; n < c.size(); ++n) c[n] += b[n];
  return c;
}

XSeries sub(const XSeries& a, const XSeries& b) {
  XSeries c(a);
  for (std::size_t n = 0; n < c.size(); ++n) c[n] -= b[n];
  return c;
}

XSeries scale(const RatBivariate& p, const XSeries& a) {
  XSeries c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) c[n] = p * a[n];
  return c;
}

XSeries mul(const XSeries& a, const XSeries& b) {
  XSeries c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

XSeries power(const XSeries& a, int e) {
  XSeries p = zeros(static_cast<int>(a.size()) - 1);
  p[0] = RatBivariate::constant(1);
  for (int i = 0; i < e; ++i) p = mul(p, a);
  return p;
}

// d/dx; the top coefficient becomes unknown and is dropped.
XSeries dx(const XSeries& a) {
  XSeries c(a.size() - 1);
  for (std::size_t n = 0; n + 1 < a.size(); ++n) c[n] = a[n + 1] * Rational(static_cast<long>(n + 1));
  return c;
}

// Integral from 0; stays within the same truncation.
XSeries integral(const XSeries& a) {
  XSeries c(a.size());
  for (std::size_t n = 0; n + 1 < a.size(); ++n) c[n + 1] = a[n] * Rational(1, static_cast<long>(n + 1));
  return c;
}

XSeries exp_series(const XSeries& g) {
  if (!g[0].is_zero()) throw ConsistencyError("exponential of a series with nonzero constant term");
  XSeries e(g.size());
  e[0] = RatBivariate::constant(1);
  for (std::size_t n = 1; n < g.size(); ++n) {
    RatBivariate acc;
    for (std::size_t j = 1; j <= n; ++j) acc += (g[j] * Rational(static_cast<long>(j))) * e[n - j];
    e[n] = acc * Rational(1, static_cast<long>(n));
  }
  return e;
}

XSeries map(const XSeries& a, const std::function<RatBivariate(const RatBivariate&)>& f) {
  XSeries c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) c[n] = f(a[n]);
  return c;
}

XSeries truncate(const XSeries& a, int K) {
  return XSeries(a.begin(), a.begin() + std::min<std::ptrdiff_t>(K + 1, static_cast<std::ptrdiff_t>(a.size())));
}

// Divides every coefficient by (1 - y); the division must be exact.
XSeries divide_one_minus_y(const XSeries& a) {
  XSeries c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    RatBivariate q;
    for (int i = 0; i <= a[n].degree_first(); ++i) {
      Rational run(0);
      for (int j = 0; j <= a[n].degree_second(); ++j) {
        run += a[n].coeff(i, j);
        if (j < a[n].degree_second()) q.add_to(i, j, run);
      }
      if (run != 0) throw ConsistencyError("coefficient not divisible by 1-y at x^" + std::to_string(n));
    }
    c[n] = q;
  }
  return c;
}

// Returns an empty string when a and b agree through x^K, else the first differing (x,t,y).
std::string first_mismatch(const XSeries& a, const XSeries& b, int K) {
  for (int n = 0; n <= K; ++n) {
    const RatBivariate d = a[static_cast<std::size_t>(n)] - b[static_cast<std::size_t>(n)];
    if (d.is_zero()) continue;
    for (int i = 0; i <= d.degree_first(); ++i)
      for (int j = 0; j <= d.degree_second(); ++j)
        if (d.coeff(i, j) != 0)
          return "mismatch at (x,t,y)=(" + std::to_string(n) + "," + std::to_string(i) + "," +
                 std::to_string(j) + ")";
  }
  return {};
}

void compare(Report& rep, const std::string& name, const XSeries& a, const XSeries& b, int K) {
  const std::string where = first_mismatch(a, b, K);
  rep.add(name, where.empty(), where.empty() ? "through x^" + std::to_string(K) : where);
}

XSeries egf_from(const std::vector<IntBivariate>& c, int K) {
  XSeries f = zeros(K);
  f[0] = RatBivariate::constant(1);
  for (int k = 1; k <= K; ++k)
    f[static_cast<std::size_t>(k)] =
        cast<Rational>(c[static_cast<std::size_t>(k - 1)]) * Rational(BigInt(1), factorial(static_cast<unsigned>(k)));
  return f;
}

}  // namespace

Report egf_check(int r, int K, int brute_order) {
  if (r < 2 || K < 1) throw InvalidInput("egf check needs r >= 2 and K >= 1");
  Report rep;
  rep.title = "egf r=" + std::to_string(r);
  const std::string tag = "r=" + std::to_string(r) + " ";

  // Build one order beyond K so that x-derivatives are exact through x^K.
  const int L = K + 1;
  std::vector<IntBivariate> c, ct;
  for (int k = 1; k <= L; ++k) {
    c.push_back(c_bivar(r, k, false));
    ct.push_back(c_bivar(r, k, true));
  }
  const XSeries F = egf_from(c, L), Ft = egf_from(ct, L);

  const RatBivariate t = RatBivariate::monomial(1, 1, 0), y = RatBivariate::monomial(1, 0, 1);
  const RatBivariate one = RatBivariate::constant(1);
  XSeries ONE = zeros(L);
  ONE[0] = one;
  XSeries T = zeros(L);
  T[0] = t;

  const XSeries Ft_r1 = power(Ft, r - 1);
  const XSeries core = sub(add(Ft, T), ONE);  // Ft - 1 + t

  // ODE for the tilde series.
  {
    XSeries rhs = mul(add(scale(t * (y - one), ONE), mul(Ft, core)), Ft_r1);
    compare(rep, tag + "ode", dx(Ft), rhs, K);
  }
  // F = exp(t(1-y) * int Ft^(r-2)) Ft
  {
    const XSeries e = exp_series(scale(t * (one - y), integral(power(Ft, r - 2))));
    compare(rep, tag + "fg", F, mul(e, Ft), K);
  }
  // PDEs: (1 - r t y x) G_x + (t-1) t y G_t + (1+t)(y-1) y G_y = lambda G
  auto pde_lhs = [&](const XSeries& G) {
    const XSeries Gx = dx(G);
    XSeries lhs = truncate(Gx, K);
    const RatBivariate rty = Rational(r) * t * y;
    for (int n = 1; n <= K; ++n) lhs[static_cast<std::size_t>(n)] -= rty * Gx[static_cast<std::size_t>(n - 1)];
    lhs = add(lhs, truncate(scale((t - one) * t * y, map(G, partial_first<Rational>)), K));
    lhs = add(lhs, truncate(scale((one + t) * (y - one) * y, map(G, partial_second<Rational>)), K));
    return lhs;
  };
  compare(rep, tag + "pde", pde_lhs(F), truncate(scale(t, F), K), K);
  compare(rep, tag + "pde-tilde", pde_lhs(Ft), truncate(scale(t * y, Ft), K), K);

  // Split by whether the word starts with a plateau.
  const XSeries Fbar = divide_one_minus_y(sub(F, Ft));
  const XSeries Facute = sub(F, Fbar);
  compare(rep, tag + "split", add(scale(y, Fbar), Facute), Ft, L);
  compare(rep, tag + "f1", dx(Fbar), mul(add(T, mul(Fbar, core)), Ft_r1), K);
  compare(rep, tag + "f2", dx(Facute), mul(add(sub(Ft, ONE), mul(sub(Facute, ONE), core)), Ft_r1), K);

  // The same split obtained by enumeration at small orders.
  const int B = std::min(K, brute_order);
  XSeries bar = zeros(B), acute = zeros(B);
  acute[0] = one;
  for (int k = 1; k <= B; ++k) {
    const Rational w(BigInt(1), factorial(static_cast<unsigned>(k)));
    for_each_stirling(r, k, [&](const std::vector<int>& word) {
      const int a = stirling_stat(word, StirlingStat::lplat), b = stirling_stat(word, StirlingStat::ascplat);
      (word[0] == word[1] ? bar : acute)[static_cast<std::size_t>(k)].add_to(a, b, w);
    });
  }
  compare(rep, tag + "split-enumerated", bar, truncate(Fbar, B), B);
  compare(rep, tag + "split-enumerated-acute", acute, truncate(Facute, B), B);
  return rep;
}

}  // namespace cstat
