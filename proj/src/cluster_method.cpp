#include "cstat/cluster_method.hpp"

#include <string>

#include "cstat/clusters.hpp"
#include "cstat/errors.hpp"
#include "cstat/recurrences.hpp"
#include "cstat/series.hpp"

namespace cstat {

Permutation PatternFamily::pattern() const { return variant == Variant::head ? head_pattern(m) : tail_pattern(m); }

std::optional<PatternFamily> recognize(const Permutation& sigma) {
  const int m = sigma.size();
  if (m < 3) return std::nullopt;
  if (sigma == head_pattern(m)) return PatternFamily{m, Variant::head};
  if (sigma == tail_pattern(m)) return PatternFamily{m, Variant::tail};
  return std::nullopt;
}

int stat_shift(Stat which) {
  switch (which) {
    case Stat::ides:
    case Stat::ipk: return 1;
    case Stat::ilpk: return 0;
    default: throw InvalidInput("pattern families are defined for ides, ipk and ilpk only");
  }
}

int max_occurrences(int m, int n) { return n < m ? 0 : (n - 1) / (m - 1); }

namespace {

void check_args(int m, int N, int smax) {
  if (m < 3) throw InvalidInput("pattern length must be at least 3");
  if (N < 1) throw InvalidInput("N must be at least 1");
  if (smax < 0) throw InvalidInput("s-truncation must be non-negative");
}

// Adds coeff(t) * (s-1)^k x^n into f, keeping s-powers up to f.sdeg().
void add_cluster_term(TruncSeries& f, int n, int k, const TSeries& coeff) {
  for (int j = 0; j <= std::min(k, f.sdeg()); ++j) {
    BigInt b = binomial(k, j);
    if ((k - j) % 2 == 1) b = -b;
    f.add_t_series(n, j, coeff * Rational(b));
  }
}

// Number of cluster sizes k whose length (m-1)k+1 stays within N.
int max_cluster_index(int m, int N) { return (N - 1) / (m - 1); }

StatPolyFamily make_family(int m, Variant v, Stat which, int N, int smax) {
  StatPolyFamily fam;
  fam.family = {m, v};
  fam.stat = which;
  fam.nmax = N;
  fam.smax = smax;
  fam.polys.resize(static_cast<std::size_t>(N) + 1);
  fam.polys[0] = IntBivariate::constant(1);
  return fam;
}

void set_row(IntBivariate& target, int j, const IntPolynomial& p) {
  for (int e = 0; e <= p.degree(); ++e)
    if (p.coeff(e) != 0) target.set(j, e, p.coeff(e));
}

}  // namespace

StatPolyFamily a_ides(int m, int N, int smax) {
  check_args(m, N, smax);
  const int T = 2 * N + 2;
  TruncSeries f(N, T, smax);
  f.add_t_series(1, 0, TSeries(IntPolynomial{0, 1}, T) * TSeries::inverse_one_minus_t_power(2, T));
  const int kmax = max_cluster_index(m, N);
  const auto cdes = kmax > 0 ? c_univar_sequence(m - 1, kmax, Family::des) : std::vector<IntPolynomial>{};
  for (int k = 1; k <= kmax; ++k) {
    const int n = (m - 1) * k + 1;
    // t C(t) z^n / (1-t) with z = x/(1-t)
    const TSeries coeff = TSeries(shift_up(cdes[static_cast<std::size_t>(k - 1)], 1), T) *
                          TSeries::inverse_one_minus_t_power(n + 1, T);
    add_cluster_term(f, n, k, coeff);
  }
  const TruncSeries closure = hadamard_sum_closure(f);
  StatPolyFamily fam = make_family(m, Variant::head, Stat::ides, N, smax);
  for (int n = 1; n <= N; ++n)
    for (int j = 0; j <= smax; ++j)
      set_row(fam.polys[static_cast<std::size_t>(n)], j, divide_out(closure.t_series(n, j), n));
  return fam;
}

StatPolyFamily p_ipk(int m, int N, Variant variant, int smax) {
  check_args(m, N, smax);
  const int T = 2 * N + 2;
  TruncSeries f(N, T, smax);
  f.add_t_series(1, 0, TSeries(IntPolynomial{0, 2}, T) * TSeries::inverse_one_minus_t_power(2, T));
  const int kmax = max_cluster_index(m, N);
  const Family inner = variant == Variant::head ? Family::pk : Family::lpk;
  const auto c = kmax > 0 ? c_univar_sequence(m - 1, kmax, inner) : std::vector<IntPolynomial>{};
  for (int k = 1; k <= kmax; ++k) {
    const int n = (m - 1) * k + 1;
    // (1+t)/(2(1-t)) u C(u) z^n with z = (1+t)x/(1-t)
    const TSeries coeff = substitute_u(shift_up(c[static_cast<std::size_t>(k - 1)], 1), T) *
                          TSeries::one_plus_t_power(n + 1, T) * TSeries::inverse_one_minus_t_power(n + 1, T) *
                          Rational(1, 2);
    add_cluster_term(f, n, k, coeff);
  }
  const TruncSeries closure = hadamard_sum_closure(f);
  StatPolyFamily fam = make_family(m, variant, Stat::ipk, N, smax);
  for (int n = 1; n <= N; ++n) {
    const TSeries back = TSeries::one_minus_t_power(n + 1, T) * TSeries::one_plus_t_power(-(n + 1), T) * Rational(2);
    for (int j = 0; j <= smax; ++j)
      set_row(fam.polys[static_cast<std::size_t>(n)], j, unsubstitute_u(closure.t_series(n, j) * back, (n + 1) / 2));
  }
  return fam;
}

StatPolyFamily p_ilpk(int m, int N, int smax) {
  check_args(m, N, smax);
  const int T = 2 * N + 2;
  TruncSeries f(N, T, smax);
  f.add_t_series(1, 0, TSeries(IntPolynomial{1, 1}, T) * TSeries::inverse_one_minus_t_power(2, T));
  const int kmax = max_cluster_index(m, N);
  const auto c = kmax > 0 ? c_univar_sequence(m - 1, kmax, Family::lpk) : std::vector<IntPolynomial>{};
  for (int k = 1; k <= kmax; ++k) {
    const int n = (m - 1) * k + 1;
    // C(u) z^n / (1-t)
    const TSeries coeff = substitute_u(c[static_cast<std::size_t>(k - 1)], T) * TSeries::one_plus_t_power(n, T) *
                          TSeries::inverse_one_minus_t_power(n + 1, T);
    add_cluster_term(f, n, k, coeff);
  }
  const TruncSeries closure = hadamard_sum_closure(f);
  StatPolyFamily fam = make_family(m, Variant::head, Stat::ilpk, N, smax);
  for (int n = 1; n <= N; ++n) {
    const TSeries back = TSeries::one_minus_t_power(n + 1, T) * TSeries::one_plus_t_power(-n, T);
    for (int j = 0; j <= smax; ++j)
      set_row(fam.polys[static_cast<std::size_t>(n)], j, unsubstitute_u(closure.t_series(n, j) * back, n / 2));
  }
  return fam;
}

StatPolyFamily fast_stat_family(const PatternFamily& family, Stat which, int N, int smax) {
  StatPolyFamily fam;
  switch (which) {
    case Stat::ides: fam = a_ides(family.m, N, smax); break;
    case Stat::ipk: fam = p_ipk(family.m, N, family.variant, smax); break;
    case Stat::ilpk: fam = p_ilpk(family.m, N, smax); break;
    default: throw InvalidInput("pattern families are defined for ides, ipk and ilpk only");
  }
  fam.family = family;
  return fam;
}

StatPolyFamily brute_stat_family(const PatternFamily& family, Stat which, int N, int smax, int bound) {
  check_args(family.m, N, smax);
  const int shift = stat_shift(which);
  StatPolyFamily fam = make_family(family.m, family.variant, which, N, smax);
  const Permutation sigma = family.pattern();
  for (int n = 1; n <= N; ++n) {
    const IntBivariate full = brute_distribution(n, sigma, which, shift, bound);
    IntBivariate& out = fam.polys[static_cast<std::size_t>(n)];
    for (int j = 0; j <= std::min(smax, full.degree_first()); ++j) set_row(out, j, full.row(j));
  }
  return fam;
}

Report verify_gjcm(const Permutation& sigma, int N, int bound) {
  if (N > bound)
    throw ResourceLimit("cluster verification at n=" + std::to_string(N) + " exceeds bound " + std::to_string(bound));
  const int m = sigma.size();
  Report rep;
  rep.title = "gjcm " + sigma.to_string();
  // G = 1 - x - R(s-1, x) as an ordinary series in x with coefficients in Q[s].
  std::vector<RatPolynomial> g(static_cast<std::size_t>(N) + 1);
  g[0] = RatPolynomial{1};
  if (N >= 1) g[1] = RatPolynomial{-1};
  const RatPolynomial s_minus_one{-1, 1};
  for (int n = m; n <= N; ++n) {
    std::vector<long> by_marks(static_cast<std::size_t>(n) + 1, 0);
    for_each_marked_cluster(
        sigma, n, [&](const MarkedCluster& c) { ++by_marks[c.marks.size()]; }, bound);
    RatPolynomial r;
    RatPolynomial pw{1};
    for (int k = 0; k <= n; ++k) {
      if (by_marks[static_cast<std::size_t>(k)] != 0) r += pw * Rational(by_marks[static_cast<std::size_t>(k)]);
      pw = pw * s_minus_one;
    }
    g[static_cast<std::size_t>(n)] -= r * Rational(BigInt(1), factorial(static_cast<unsigned>(n)));
  }
  // H = 1/G, using G_0 = 1.
  std::vector<RatPolynomial> h(static_cast<std::size_t>(N) + 1);
  h[0] = RatPolynomial{1};
  for (int n = 1; n <= N; ++n) {
    RatPolynomial acc;
    for (int i = 1; i <= n; ++i) acc -= g[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(n - i)];
    h[static_cast<std::size_t>(n)] = acc;
  }
  for (int n = 1; n <= N; ++n) {
    const IntPolynomial expected = brute_distribution(n, sigma, Stat::des, 0).second_at_one();
    const RatPolynomial got = h[static_cast<std::size_t>(n)] * Rational(factorial(static_cast<unsigned>(n)));
    std::string detail = "n=" + std::to_string(n);
    const bool ok = got == cast<Rational>(expected);
    if (!ok) {
      for (int j = 0; j <= std::max(got.degree(), expected.degree()); ++j)
        if (got.coeff(j) != Rational(expected.coeff(j))) {
          detail += " mismatch at s^" + std::to_string(j) + ": cluster formula " + to_string(got.coeff(j)) +
                    ", enumeration " + to_string(expected.coeff(j));
          break;
        }
    }
    rep.add(sigma.to_string() + " n=" + std::to_string(n), ok, detail);
  }
  return rep;
}

}  // namespace cstat
