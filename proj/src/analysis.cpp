#include "cstat/analysis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cstat/cluster_method.hpp"
#include "cstat/errors.hpp"

namespace cstat {

namespace {

BigInt content(const IntPolynomial& f) {
  BigInt g(0);
  for (const auto& a : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

// lc(b)^(d+1) a - q b, with the multiplier replaced by |lc(b)|^(d+1) so signs survive.
IntPolynomial signed_prem(IntPolynomial a, const IntPolynomial& b) {
  const int d = a.degree() - b.degree();
  if (d < 0) return a;
  const BigInt lc = b.leading();
  int steps = 0;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const IntPolynomial sub = shift_up(b, a.degree() - b.degree()) * a.leading();
    a = a * lc - sub;
    ++steps;
  }
  for (int i = steps; i < d + 1; ++i) a = a * lc;
  if (lc < 0 && (d + 1) % 2 == 1) a = -a;
  return a;
}

RatPolynomial to_rat(const IntPolynomial& p) { return cast<Rational>(p); }

RatPolynomial monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

// Quotient and remainder over Q.
std::pair<RatPolynomial, RatPolynomial> rdivmod(RatPolynomial a, const RatPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  RatPolynomial q;
  const Rational lc = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int e = a.degree() - b.degree();
    const Rational c = a.leading() / lc;
    q.add_to(e, c);
    a -= shift_up(b, e) * c;
  }
  return {q, a};
}

RatPolynomial rexact(const RatPolynomial& a, const RatPolynomial& b) {
  auto [q, r] = rdivmod(a, b);
  if (!r.is_zero()) throw ConsistencyError("inexact polynomial division");
  return q;
}

RatPolynomial rgcd(const RatPolynomial& a, const RatPolynomial& b) {
  return monic(to_rat(poly_gcd(primitive_part(a), primitive_part(b))));
}

int sign_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  if (f.leading() < 0) c = -c;
  std::vector<BigInt> out;
  for (const auto& a : f.coeffs()) out.push_back(BigInt(a / c));
  return IntPolynomial(std::move(out));
}

IntPolynomial primitive_part(const RatPolynomial& f) {
  BigInt l(1);
  for (const auto& a : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  std::vector<BigInt> out;
  for (const auto& a : f.coeffs()) out.push_back(BigInt(a.get_num() * (l / a.get_den())));
  return primitive_part(IntPolynomial(std::move(out)));
}

IntPolynomial poly_gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
  IntPolynomial a = primitive_part(a0), b = primitive_part(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = signed_prem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.degree() <= 0) return primitive_part(f);
  const IntPolynomial g = poly_gcd(f, derivative(f));
  return primitive_part(rexact(to_rat(f), to_rat(g)));
}

std::vector<IntPolynomial> squarefree_factors(const IntPolynomial& f0) {
  if (f0.is_zero()) throw InvalidInput("square-free factorization of the zero polynomial");
  std::vector<IntPolynomial> out;
  const RatPolynomial f = monic(to_rat(f0));
  if (f.degree() == 0) return out;
  const RatPolynomial df = derivative(f);
  const RatPolynomial b = rgcd(f, df);
  RatPolynomial c = rexact(f, b);
  RatPolynomial d = rexact(df, b) - derivative(c);
  while (c.degree() > 0) {
    const RatPolynomial a = rgcd(c, d);
    c = rexact(c, a);
    d = rexact(d, a) - derivative(c);
    out.push_back(primitive_part(a));
  }
  return out;
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& f) {
  std::vector<IntPolynomial> chain{primitive_part(f)};
  if (f.degree() <= 0) return chain;
  chain.push_back(primitive_part(derivative(f)));
  while (true) {
    const IntPolynomial r = signed_prem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    IntPolynomial next = -r;
    const BigInt c = content(next);
    std::vector<BigInt> co;
    for (const auto& a : next.coeffs()) co.push_back(BigInt(a / c));
    chain.emplace_back(std::move(co));
  }
  return chain;
}

int count_real_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw InvalidInput("the zero polynomial has infinitely many roots");
  if (f.degree() == 0) return 0;
  const auto chain = sturm_chain(squarefree_part(f));
  std::vector<int> at_minus, at_plus;
  for (const auto& p : chain) {
    const int s = sgn(p.leading());
    at_plus.push_back(s);
    at_minus.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return sign_variations(at_minus) - sign_variations(at_plus);
}

bool is_real_rooted(const IntPolynomial& f) {
  if (f.is_zero()) throw InvalidInput("real-rootedness of the zero polynomial is undefined");
  const int low = lowest_degree(f);
  const IntPolynomial g(std::vector<BigInt>(f.coeffs().begin() + low, f.coeffs().end()));
  const IntPolynomial sf = squarefree_part(g);
  return count_real_roots(sf) == sf.degree();
}

bool interlaces(const IntPolynomial& g, const IntPolynomial& f) {
  if (f.is_zero() || g.is_zero()) return true;
  if (f.leading() < 0 || g.leading() < 0) throw InvalidInput("interlacing needs positive leading coefficients");
  if (!is_real_rooted(f) || !is_real_rooted(g)) throw InvalidInput("interlacing needs real-rooted polynomials");
  if (f.degree() != g.degree() && f.degree() != g.degree() + 1) return false;
  if (g.degree() == 0) return true;
  // g precedes f exactly when the Wronskian g f' - g' f is non-negative on the real line.
  const IntPolynomial w = g * derivative(f) - derivative(g) * f;
  if (w.is_zero()) return true;
  if (w.leading() < 0) return false;
  const auto factors = squarefree_factors(w);
  for (std::size_t i = 0; i < factors.size(); i += 2)
    if (count_real_roots(factors[i]) > 0) return false;
  return true;
}

Shape shape_checks(const IntPolynomial& f) {
  const auto& c = f.coeffs();
  for (const auto& a : c)
    if (a < 0) throw InvalidInput("shape checks need non-negative coefficients");
  Shape s;
  const std::size_t n = c.size();
  std::size_t i = 0;
  while (i + 1 < n && c[i] <= c[i + 1]) ++i;
  while (i + 1 < n && c[i] >= c[i + 1]) ++i;
  s.unimodal = i + 1 >= n;
  s.log_concave = true;
  for (std::size_t j = 1; j + 1 < n; ++j)
    if (c[j] * c[j] < c[j - 1] * c[j + 1]) s.log_concave = false;
  BigInt best(-1);
  for (std::size_t j = 0; j < n; ++j) {
    if (c[j] > best) {
      best = c[j];
      s.modes.clear();
    }
    if (c[j] == best) s.modes.push_back(static_cast<int>(j));
  }
  return s;
}

MomentSummary moments(const IntPolynomial& f) {
  if (f.is_zero()) throw InvalidInput("moments of the zero polynomial");
  const auto& c = f.coeffs();
  BigInt total(0), first(0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] < 0) throw InvalidInput("moments need non-negative coefficients");
    total += c[j];
    first += c[j] * static_cast<long>(j);
  }
  MomentSummary m;
  m.mean = Rational(first, total);
  m.mean.canonicalize();
  Rational m2(0), m3(0), m4(0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const Rational d = Rational(static_cast<long>(j)) - m.mean;
    const Rational d2 = d * d;
    m2 += d2 * c[j];
    m3 += d2 * d * c[j];
    m4 += d2 * d2 * c[j];
  }
  const Rational inv(BigInt(1), total);
  m.variance = m2 * inv;
  if (m.variance > 0) {
    const double v = m.variance.get_d();
    m.std3 = Rational(m3 * inv).get_d() / std::pow(v, 1.5);
    m.std4 = Rational(m4 * inv / (m.variance * m.variance)).get_d();
  }
  return m;
}

GrowthCoefficients growth_coefficients(int r, Family which) {
  const IntPolynomial rt{0, r};
  switch (which) {
    case Family::des: return {rt, IntPolynomial{0, 1}, IntPolynomial{0, 1 - r}};
    case Family::pk: return {rt, IntPolynomial{0, 2}, IntPolynomial{1, -r}};
    case Family::lpk: return {rt, IntPolynomial{0, 2}, IntPolynomial{0, 1 - r}};
  }
  throw InvalidInput("unknown family");
}

std::vector<Rational> mean_via_recurrence(int r, int kmax, Family which) {
  if (r < 2 || kmax < 1) throw InvalidInput("need r >= 2 and kmax >= 1");
  const GrowthCoefficients g = growth_coefficients(r, which);
  const Rational a(g.alpha(1)), b(g.beta(1)), c(g.gamma(1));
  const Rational da(derivative(g.alpha)(1)), dc(derivative(g.gamma)(1));
  if (a + 2 * b <= 0) throw InvalidInput("growth coefficients need alpha + 2 beta > 0");
  std::vector<Rational> mu{Rational(which == Family::pk ? 0 : 1)};
  for (int k = 2; k <= kmax; ++k) {
    const Rational den = a * k + c;
    mu.push_back(Rational((1 - b / den) * mu.back() + (da * k + dc) / den));
  }
  return mu;
}

Rational mean_slope(const GrowthCoefficients& g) {
  return Rational(Rational(derivative(g.alpha)(1)) / (Rational(g.alpha(1)) + Rational(g.beta(1))));
}

Rational variance_slope(const GrowthCoefficients& g) {
  const Rational a(g.alpha(1)), b(g.beta(1));
  const Rational dda(derivative(derivative(g.alpha))(1)), db(derivative(g.beta)(1));
  const Rational mu = mean_slope(g);
  return Rational(mu + (dda - 2 * mu * db - a * mu * mu) / (a + 2 * b));
}

Rational des_mean_closed(int r, int k) {
  Rational q(r * k + 1, r + 1);
  q.canonicalize();
  return q;
}

Rational pk_mean_closed_r2(int k) {
  Rational q(k * (k - 1), 2 * k - 1);
  q.canonicalize();
  return q;
}

Rational lpk_mean_closed_r2(int k) {
  Rational q(k * k, 2 * k - 1);
  q.canonicalize();
  return q;
}

double gamma_mean(int r, int k, Family which) {
  const double rr = r, ir = 1.0 / r;
  const double c = rr * std::sin(std::numbers::pi * ir) * std::pow(std::tgamma(1 + ir), 2) *
                   std::exp(std::lgamma(k - ir) - std::lgamma(k + ir)) / (std::numbers::pi * (rr + 2));
  switch (which) {
    case Family::des: return (rr * k + 1) / (rr + 1);
    case Family::pk: return (2.0 * k - 1) * rr / (2 * (rr + 2)) - rr / 2 * c;
    case Family::lpk: return (rr * k + 1) / (rr + 2) + c;
  }
  return 0;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, BigInt(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 0; --j)
      row[static_cast<std::size_t>(j)] =
          j == 0 ? BigInt(0) : BigInt(j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)]);
  return row[static_cast<std::size_t>(k)];
}

Report gessel_stanley_check(int k, int M) {
  if (k < 1 || M < 0) throw InvalidInput("need k >= 1 and M >= 0");
  Report rep;
  rep.title = "gessel-stanley k=" + std::to_string(k);
  const IntPolynomial c = c_univar(2, k, Family::des);
  for (int m = 0; m <= M; ++m) {
    BigInt lhs(0);
    for (int i = 0; i <= std::min(m, c.degree()); ++i) lhs += c.coeff(i) * binomial(m - i + 2 * k, 2 * k);
    const BigInt rhs = stirling2(k + m, m);
    rep.add("k=" + std::to_string(k) + " m=" + std::to_string(m), lhs == rhs,
            "series " + to_string(lhs) + ", S(k+m,m) " + to_string(rhs));
  }
  return rep;
}

Report normality_trend(int r, Family which, const std::vector<int>& ks, double band_low, double band_high) {
  if (ks.empty()) throw InvalidInput("normality trend needs at least one k");
  Report rep;
  const std::string tag = std::string(family_name(which)) + " r=" + std::to_string(r);
  rep.title = "normality " + tag;
  const auto seq = c_univar_sequence(r, ks.back(), which);
  std::vector<MomentSummary> ms;
  for (int k : ks) ms.push_back(moments(seq[static_cast<std::size_t>(k - 1)]));
  std::string trail;
  bool skew_ok = true, kurt_ok = true;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    trail += " k=" + std::to_string(ks[i]) + ": skew " + std::to_string(ms[i].std3) + " kurt " + std::to_string(ms[i].std4);
    if (i > 0) {
      skew_ok = skew_ok && std::abs(ms[i].std3) < std::abs(ms[i - 1].std3);
      kurt_ok = kurt_ok && std::abs(ms[i].std4 - 3) < std::abs(ms[i - 1].std4 - 3);
    }
  }
  rep.add(tag + " skewness decreasing", skew_ok, trail);
  rep.add(tag + " excess kurtosis decreasing", kurt_ok, trail);
  const Rational slope = variance_slope(growth_coefficients(r, which));
  const double ratio = ms.back().variance.get_d() / (slope.get_d() * ks.back());
  rep.add(tag + " variance ratio", ratio >= band_low && ratio <= band_high,
          "var/(slope k) at k=" + std::to_string(ks.back()) + " is " + std::to_string(ratio));
  return rep;
}

Conjecture parse_conjecture(std::string_view name) {
  if (name == "lin-cpk") return Conjecture::lin_cpk;
  if (name == "k-clpk") return Conjecture::k_clpk;
  if (name == "k1-clpk") return Conjecture::k1_clpk;
  if (name == "fib-ides") return Conjecture::fib_ides;
  if (name == "ipk-linear") return Conjecture::ipk_linear;
  if (name == "real-roots") return Conjecture::real_roots;
  throw InvalidInput("unknown conjecture '" + std::string(name) + "'");
}

std::string_view conjecture_name(Conjecture c) {
  switch (c) {
    case Conjecture::lin_cpk: return "lin-cpk";
    case Conjecture::k_clpk: return "k-clpk";
    case Conjecture::k1_clpk: return "k1-clpk";
    case Conjecture::fib_ides: return "fib-ides";
    case Conjecture::ipk_linear: return "ipk-linear";
    case Conjecture::real_roots: return "real-roots";
  }
  return "?";
}

namespace {

void expect(Report& rep, const std::string& name, const BigInt& observed, const BigInt& expected) {
  rep.add(name, observed == expected, "expected " + to_string(expected) + ", observed " + to_string(observed));
}

BigInt ipk_linear_formula(int m, int n) {
  BigInt s(0);
  for (int j = 0; n - (m - 1) * j - 1 >= 0; ++j) {
    BigInt term = binomial(n - (m - 2) * j - 1, n - (m - 1) * j - 1) *
                  pow(BigInt(2), static_cast<unsigned>(n - (m - 1) * j - 1));
    s += j % 2 == 0 ? term : BigInt(-term);
  }
  return s;
}

}  // namespace

Report check_conjecture(Conjecture which, const ConjectureBounds& b) {
  Report rep;
  rep.title = "conjecture " + std::string(conjecture_name(which));
  switch (which) {
    case Conjecture::lin_cpk:
      for (int r = 2; r <= b.rmax; ++r) {
        const auto seq = c_univar_sequence(r, b.kmax, Family::pk);
        for (int k = 1; k <= b.kmax; ++k) {
          const BigInt num = (pow(BigInt(3), static_cast<unsigned>(k)) - 2 * k - 1) * r;
          // The formula is only meaningful when it is an integer; report the raw quotient otherwise.
          const BigInt expected = num / 4;
          const bool exact = num % 4 == 0;
          const BigInt observed = seq[static_cast<std::size_t>(k - 1)].coeff(1);
          rep.add("r=" + std::to_string(r) + " k=" + std::to_string(k), exact && observed == expected,
                  "expected " + to_string(Rational(num, 4)) + ", observed " + to_string(observed));
        }
      }
      break;
    case Conjecture::k_clpk:
      for (int r = 2; r <= b.rmax; ++r) {
        const auto seq = c_univar_sequence(r, b.kmax, Family::lpk);
        for (int k = 1; k <= b.kmax; ++k)
          expect(rep, "r=" + std::to_string(r) + " k=" + std::to_string(k), seq[static_cast<std::size_t>(k - 1)].coeff(k),
                 closed_product(r, k, ClosedProduct::lpk_leading_conj));
      }
      break;
    case Conjecture::k1_clpk: {
      const auto seq = c_univar_sequence(3, b.k3max, Family::lpk);
      for (int k = 1; k <= b.k3max; ++k)
        expect(rep, "k=" + std::to_string(k), seq[static_cast<std::size_t>(k - 1)].coeff(k - 1),
               factorial(static_cast<unsigned>(k)) * binomial(k, 2));
      break;
    }
    case Conjecture::fib_ides: {
      const StatPolyFamily fam = a_ides(3, b.fib_nmax, 0);
      for (int n = 1; n <= b.fib_nmax; ++n)
        expect(rep, "n=" + std::to_string(n), fam.avoidance(n).coeff(n - 1),
               fibonacci(static_cast<unsigned>(n + 3)) - n - 2);
      break;
    }
    case Conjecture::ipk_linear:
      for (int m = 3; m <= b.mmax; ++m) {
        const StatPolyFamily fam = p_ipk(m, b.ipk_nmax, Variant::head, 0);
        for (int n = 1; n <= b.ipk_nmax; ++n)
          expect(rep, "m=" + std::to_string(m) + " n=" + std::to_string(n), fam.avoidance(n).coeff(1),
                 ipk_linear_formula(m, n));
      }
      break;
    case Conjecture::real_roots:
      rep.notes.push_back(
          "partial coverage: only the patterns 2134...m and 12...(m-2)m(m-1) are generated here; "
          "monotone and other transposition patterns are not checked");
      for (int m = 3; m <= b.roots_mmax; ++m)
        for (Stat st : {Stat::ides, Stat::ipk, Stat::ilpk})
          for (Variant v : {Variant::head, Variant::tail}) {
            // ides and ilpk coincide for the two variants; they are still reported per pattern.
            const StatPolyFamily fam = fast_stat_family({m, v}, st, b.roots_nmax, 0);
            const std::string pat = PatternFamily{m, v}.pattern().to_string();
            for (int n = 2; n <= b.roots_nmax; ++n)
              rep.add(pat + " " + std::string(stat_name(st)) + " n=" + std::to_string(n),
                      is_real_rooted(fam.avoidance(n)));
          }
      break;
  }
  return rep;
}

}  // namespace cstat
