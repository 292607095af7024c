#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cstat {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  Rational c(v);
  c.canonicalize();
  return c.get_str();
}

inline BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

inline BigInt pow(const BigInt& base, unsigned e) {
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
  return p;
}

inline BigInt fibonacci(unsigned n) {
  BigInt f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Saturating product used only for resource-bound checks.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace cstat
