#pragma once

#include <string_view>
#include <vector>

#include "cstat/polynomial.hpp"
#include "cstat/recurrences.hpp"
#include "cstat/report.hpp"

namespace cstat {

// --- exact polynomial algebra over Z ---------------------------------------------

/// Content-free version with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& f);
IntPolynomial primitive_part(const RatPolynomial& f);
/// Primitive gcd (positive leading coefficient); gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);
/// f / gcd(f, f'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& f);
/// Yun decomposition: factors[i] has multiplicity i+1; each is primitive.
std::vector<IntPolynomial> squarefree_factors(const IntPolynomial& f);

/// Sturm chain of a square-free polynomial, built with sign-preserving pseudo-remainders.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& f);
/// Number of distinct real roots.
int count_real_roots(const IntPolynomial& f);

bool is_real_rooted(const IntPolynomial& f);

/// g precedes f in the interlacing order: roots of g interlace those of f from the left.
/// Both must be real-rooted with positive leading coefficients.
bool interlaces(const IntPolynomial& g, const IntPolynomial& f);

// --- coefficient shape and moments -----------------------------------------------

struct Shape {
  bool unimodal = false;
  bool log_concave = false;
  std::vector<int> modes;
};

Shape shape_checks(const IntPolynomial& f);

struct MomentSummary {
  Rational mean;
  Rational variance;
  double std3 = 0;
  double std4 = 0;
};

MomentSummary moments(const IntPolynomial& f);

/// f_k = (alpha k + gamma) f_{k-1} + beta (1 - t) f'_{k-1}.
struct GrowthCoefficients {
  IntPolynomial alpha, beta, gamma;
};

GrowthCoefficients growth_coefficients(int r, Family which);
/// Means for k = 1..kmax (index k-1).
std::vector<Rational> mean_via_recurrence(int r, int kmax, Family which);

Rational mean_slope(const GrowthCoefficients& g);
Rational variance_slope(const GrowthCoefficients& g);

/// (rk+1)/(r+1).
Rational des_mean_closed(int r, int k);
/// k(k-1)/(2k-1) and k^2/(2k-1) at r = 2.
Rational pk_mean_closed_r2(int k);
Rational lpk_mean_closed_r2(int k);
/// Gamma-function forms of the pk and lpk means, in binary64.
double gamma_mean(int r, int k, Family which);

// --- identities and conjectures --------------------------------------------------

BigInt stirling2(int n, int k);

/// Coefficients of C^des_{2,k}(t)/(1-t)^{2k+1} through t^M against S(k+m, m).
Report gessel_stanley_check(int k, int M);

/// Skewness and excess kurtosis shrink along `ks` and the variance/k ratio approaches the slope.
Report normality_trend(int r, Family which, const std::vector<int>& ks = {12, 50, 200},
                       double band_low = 0.8, double band_high = 1.2);

enum class Conjecture { lin_cpk, k_clpk, k1_clpk, fib_ides, ipk_linear, real_roots };

Conjecture parse_conjecture(std::string_view name);
std::string_view conjecture_name(Conjecture c);

struct ConjectureBounds {
  int rmax = 40;
  int kmax = 40;
  int k3max = 30;
  int fib_nmax = 40;
  int mmax = 10;
  int ipk_nmax = 30;
  int roots_mmax = 5;
  int roots_nmax = 14;
};

Report check_conjecture(Conjecture which, const ConjectureBounds& bounds = {});

}  // namespace cstat
