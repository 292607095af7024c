#include "cstat/recurrences.hpp"

#include <string>

#include "cstat/errors.hpp"

namespace cstat {

MatrixKind parse_matrix_kind(std::string_view name) {
  if (name == "p") return MatrixKind::p;
  if (name == "q") return MatrixKind::q;
  if (name == "ptilde" || name == "p_tilde") return MatrixKind::p_tilde;
  if (name == "qtilde" || name == "q_tilde") return MatrixKind::q_tilde;
  throw InvalidInput("unknown matrix kind '" + std::string(name) + "'");
}

Family parse_family(std::string_view name) {
  if (name == "des" || name == "cdes") return Family::des;
  if (name == "pk" || name == "cpk") return Family::pk;
  if (name == "lpk" || name == "clpk") return Family::lpk;
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::des: return "des";
    case Family::pk: return "pk";
    case Family::lpk: return "lpk";
  }
  return "?";
}

namespace {

void check_rk(int r, int k) {
  if (r < 2 || k < 1) throw InvalidInput("need r >= 2 and k >= 1");
}

using Grid = std::vector<std::vector<BigInt>>;

BigInt at(const Grid& g, int i, int j) {
  if (i < 0 || j < 0 || i >= static_cast<int>(g.size()) || j >= static_cast<int>(g[0].size())) return 0;
  return g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

// One step k -> k+1 of the four-term recurrence; `tilde` selects the second variant.
Grid step(const Grid& g, int r, int k, bool tilde) {
  const std::size_t dim = g.size() + 1;
  Grid out(dim, std::vector<BigInt>(dim));
  const int shift = tilde ? 3 : 2;
  for (int i = 0; i < static_cast<int>(dim); ++i)
    for (int j = 0; j < static_cast<int>(dim); ++j) {
      BigInt v = j * at(g, i, j) + (i - j + 1) * at(g, i, j - 1);
      v += (tilde ? j : j + 1) * at(g, i - 1, j);
      v += (r * k - i - j + shift) * at(g, i - 1, j - 1);
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  return out;
}

void check_bounds(const IntBivariate& m, int k, bool tilde) {
  // des ranges over [1, k]; every (left) peak is followed by a descent.
  for (int i = 0; i <= m.degree_first(); ++i)
    for (int j = 0; j <= m.degree_second(); ++j) {
      const BigInt& v = m.coeff(i, j);
      if (v == 0) continue;
      const bool ok = v > 0 && i >= 1 && i <= k && j <= i && (tilde ? j >= 1 : j <= k - 1);
      if (!ok)
        throw ConsistencyError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") outside the expected range at k=" + std::to_string(k));
    }
}

}  // namespace

std::vector<StatMatrix> stat_matrices(int r, int kmax, MatrixKind kind) {
  check_rk(r, kmax);
  const bool tilde = kind == MatrixKind::p_tilde || kind == MatrixKind::q_tilde;
  Grid g(2, std::vector<BigInt>(2));
  g[1][tilde ? 1 : 0] = 1;
  std::vector<StatMatrix> out;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) g = step(g, r, k - 1, tilde);
    IntBivariate e(g);
    check_bounds(e, k, tilde);
    if (e.total() != closed_product(r, k, ClosedProduct::cardinality))
      throw ConsistencyError("matrix total differs from |P_{r,k}| at k=" + std::to_string(k));
    out.push_back({r, k, kind, std::move(e)});
  }
  return out;
}

StatMatrix stat_matrix(int r, int k, MatrixKind kind) { return stat_matrices(r, k, kind).back(); }

IntBivariate c_bivar(int r, int k, bool tilde) {
  check_rk(r, k);
  const IntBivariate t = IntBivariate::monomial(1, 1, 0);
  const IntBivariate y = IntBivariate::monomial(1, 0, 1);
  const IntBivariate one = IntBivariate::constant(1);
  IntBivariate c = tilde ? t * y : t;
  for (int j = 1; j < k; ++j) {
    const IntBivariate lead = tilde ? BigInt(1 + r * j) * t * y : (one + BigInt(r * j) * y) * t;
    c = lead * c + (one - t) * t * y * partial_first(c) + (one + t) * (one - y) * y * partial_second(c);
  }
  return c;
}

std::vector<IntPolynomial> c_univar_sequence(int r, int kmax, Family which) {
  check_rk(r, kmax);
  const IntPolynomial t{0, 1};
  const IntPolynomial t_one_minus_t{0, 1, -1};
  IntPolynomial c = which == Family::pk ? IntPolynomial{1} : t;
  std::vector<IntPolynomial> out{c};
  for (int k = 1; k < kmax; ++k) {
    const IntPolynomial dc = derivative(c);
    switch (which) {
      case Family::des: c = BigInt(1 + r * k) * (t * c) + t_one_minus_t * dc; break;
      case Family::pk: c = IntPolynomial{1, r * k} * c + BigInt(2) * (t_one_minus_t * dc); break;
      case Family::lpk: c = BigInt(1 + r * k) * (t * c) + BigInt(2) * (t_one_minus_t * dc); break;
    }
    out.push_back(c);
  }
  return out;
}

IntPolynomial c_univar(int r, int k, Family which) { return c_univar_sequence(r, k, which).back(); }

BigInt closed_product(int r, int k, ClosedProduct which) {
  if (r < 1 || k < 1) throw InvalidInput("need r >= 1 and k >= 1");
  const int a = which == ClosedProduct::cardinality ? r : r - 2;
  const int b = which == ClosedProduct::pk_leading ? 2 : 1;
  BigInt p(1);
  for (int j = 1; j <= k - 1; ++j) p *= a * j + b;
  return p;
}

}  // namespace cstat
