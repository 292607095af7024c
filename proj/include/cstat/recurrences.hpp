#pragma once

#include <string_view>
#include <vector>

#include "cstat/polynomial.hpp"
#include "cstat/report.hpp"

namespace cstat {

/// p/q count P_{r,k} by (des,pk) and Q_{r,k} by (lplat,ascplat);
/// the tilde kinds use lpk and lascplat instead.
enum class MatrixKind { p, q, p_tilde, q_tilde };

MatrixKind parse_matrix_kind(std::string_view name);

struct StatMatrix {
  int r = 2, k = 1;
  MatrixKind kind = MatrixKind::p;
  IntBivariate entries;  // entries.coeff(i, j)
};

StatMatrix stat_matrix(int r, int k, MatrixKind kind);
/// All matrices for k = 1..kmax; index k-1.
std::vector<StatMatrix> stat_matrices(int r, int kmax, MatrixKind kind);

/// C_{r,k}(t,y) or its tilde version; first variable t.
IntBivariate c_bivar(int r, int k, bool tilde);

enum class Family { des, pk, lpk };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

IntPolynomial c_univar(int r, int k, Family which);
/// C_{r,1}, ..., C_{r,kmax}; index k-1.
std::vector<IntPolynomial> c_univar_sequence(int r, int kmax, Family which);

enum class ClosedProduct { cardinality, pk_leading, lpk_leading_conj };

BigInt closed_product(int r, int k, ClosedProduct which);

inline constexpr int kDefaultEgfOrder = 8;

/// Truncated-series checks of the differential equations satisfied by the
/// exponential generating functions of C_{r,k} and its tilde version.
/// `brute_order` caps the plateau-split series computed by enumeration.
Report egf_check(int r, int K, int brute_order = 5);

}  // namespace cstat
