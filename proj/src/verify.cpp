#include "cstat/verify.hpp"

#include <cmath>
#include <set>
#include <string>

#include "cstat/cluster_method.hpp"
#include "cstat/clusters.hpp"
#include "cstat/errors.hpp"
#include "cstat/golden_tables.hpp"
#include "cstat/recurrences.hpp"

namespace cstat {

namespace {

std::string coeff_list(const IntPolynomial& p) {
  std::string s = "[";
  for (int i = 0; i <= p.degree(); ++i) s += (i ? "," : "") + to_string(p.coeff(i));
  return s + "]";
}

std::string rk(int r, int k) { return "r=" + std::to_string(r) + " k=" + std::to_string(k); }

IntPolynomial from_strings(const std::vector<std::string>& c) {
  std::vector<BigInt> v;
  for (const auto& s : c) v.emplace_back(s);
  return IntPolynomial(std::move(v));
}

}  // namespace

Report verify_tables() {
  Report rep;
  rep.title = "tables";
  for (const GoldenTable& tab : golden_tables()) {
    int top = 0;
    for (const auto& row : tab.rows) top = std::max(top, row.index);
    std::vector<IntPolynomial> computed;
    if (tab.pattern.empty()) {
      computed.emplace_back();  // no k = 0 row
      for (auto& p : c_univar_sequence(tab.param, top, parse_family(tab.family))) computed.push_back(std::move(p));
    } else {
      const auto fam = recognize(Permutation::parse(tab.pattern));
      if (!fam) throw ConsistencyError("table pattern " + tab.pattern + " is not a supported family");
      const StatPolyFamily f = fast_stat_family(*fam, parse_stat(tab.family), top, 0);
      for (int n = 0; n <= top; ++n) computed.push_back(f.avoidance(n));
    }
    for (const auto& row : tab.rows) {
      const IntPolynomial expected = from_strings(row.coeffs);
      const IntPolynomial& got = computed[static_cast<std::size_t>(row.index)];
      rep.add(tab.name + " row " + std::to_string(row.index), got == expected,
              got == expected ? coeff_list(got) : "expected " + coeff_list(expected) + ", computed " + coeff_list(got));
    }
  }
  return rep;
}

Report verify_equidistribution(const EquidistributionBounds& b) {
  Report rep;
  rep.title = "equidistribution";
  for (int r = 2; r <= b.rmax; ++r) {
    const auto p = stat_matrices(r, b.kmax, MatrixKind::p);
    const auto pt = stat_matrices(r, b.kmax, MatrixKind::p_tilde);
    const auto q = stat_matrices(r, b.kmax, MatrixKind::q);
    const auto qt = stat_matrices(r, b.kmax, MatrixKind::q_tilde);
    for (int k = 1; k <= b.kmax; ++k) {
      const auto i = static_cast<std::size_t>(k - 1);
      const std::string tag = rk(r, k);
      rep.add(tag + " p = q (recurrence)", p[i].entries == q[i].entries && pt[i].entries == qt[i].entries);
      rep.add(tag + " bivariate recurrence", c_bivar(r, k, false) == p[i].entries && c_bivar(r, k, true) == pt[i].entries);
      rep.add(tag + " p = enumerated P (des,pk)",
              p[i].entries == cluster_distribution(r, k, ClusterPair::des_pk, b.max_cardinality));
      rep.add(tag + " p~ = enumerated P (des,lpk)",
              pt[i].entries == cluster_distribution(r, k, ClusterPair::des_lpk, b.max_cardinality));
      rep.add(tag + " q = enumerated Q (lplat,ascplat)",
              q[i].entries ==
                  stirling_joint_distribution(r, k, StirlingStat::lplat, StirlingStat::ascplat, b.max_cardinality));
      rep.add(tag + " q~ = enumerated Q (lplat,lascplat)",
              qt[i].entries ==
                  stirling_joint_distribution(r, k, StirlingStat::lplat, StirlingStat::lascplat, b.max_cardinality));

      const auto by_char = enumerate_P(r, k, PMethod::characterization, b.max_cardinality);
      const auto by_insert = enumerate_P(r, k, PMethod::insertion, b.max_cardinality);
      const std::set<Permutation> a(by_char.begin(), by_char.end()), c(by_insert.begin(), by_insert.end());
      rep.add(tag + " P generators agree", a == c && a.size() == by_char.size());

      const Permutation sigma = head_pattern(r + 1);
      std::vector<int> marks;
      for (int j = 0; j < k; ++j) marks.push_back(1 + r * j);
      bool all_clusters = true;
      int no_peak = 0;
      bool no_peak_des = true;
      for (const auto& pi : by_char) {
        all_clusters = all_clusters && is_cluster(inverse(pi), marks, sigma);
        if (peaks(pi.letters()) == 0) {
          ++no_peak;
          no_peak_des = no_peak_des && descents(pi.letters()) == k;
        }
      }
      rep.add(tag + " inverses are clusters", all_clusters);
      rep.add(tag + " unique peakless member", no_peak == 1 && no_peak_des);
      const int n = r * k + 1;
      if (n <= std::min(b.nmax, kDefaultClusterBound)) {
        std::set<Permutation> clusters;
        for_each_marked_cluster(sigma, n, [&](const MarkedCluster& mc) { clusters.insert(inverse(mc.pi)); }, n);
        rep.add(tag + " P = inverse clusters (full enumeration)", clusters == a);
      }
    }
  }
  for (int m = 3; m <= 4; ++m)
    for (Variant v : {Variant::head, Variant::tail})
      for (Stat st : {Stat::ides, Stat::ipk, Stat::ilpk}) {
        const PatternFamily fam{m, v};
        const int smax = max_occurrences(m, b.nmax);
        const StatPolyFamily fast = fast_stat_family(fam, st, b.nmax, smax);
        const StatPolyFamily brute = brute_stat_family(fam, st, b.nmax, smax, std::max(b.nmax, kDefaultOracleBound));
        for (int n = 0; n <= b.nmax; ++n) {
          const auto i = static_cast<std::size_t>(n);
          rep.add(fam.pattern().to_string() + " " + std::string(stat_name(st)) + " n=" + std::to_string(n),
                  fast.polys[i] == brute.polys[i] && fast.polys[i].total() == factorial(static_cast<unsigned>(n)));
        }
      }
  return rep;
}

Report verify_gjcm_suite(const std::vector<std::string>& patterns, int N) {
  Report rep;
  rep.title = "gjcm";
  for (const auto& p : patterns) rep.append(verify_gjcm(Permutation::parse(p), N, std::max(N, kDefaultGjcmBound)));
  return rep;
}

Report verify_egf(const std::vector<int>& rs, int K) {
  Report rep;
  rep.title = "egf";
  for (int r : rs) rep.append(egf_check(r, K));
  return rep;
}

Report verify_gessel_stanley(int kmax, int M) {
  Report rep;
  rep.title = "gessel-stanley";
  for (int k = 1; k <= kmax; ++k) rep.append(gessel_stanley_check(k, M));
  return rep;
}

Report verify_sturm(const SturmBounds& b) {
  Report rep;
  rep.title = "sturm";
  for (int r = 2; r <= b.rmax; ++r)
    for (Family f : {Family::des, Family::pk, Family::lpk}) {
      const auto seq = c_univar_sequence(r, b.kmax, f);
      for (int k = 1; k <= b.kmax; ++k) {
        const IntPolynomial& p = seq[static_cast<std::size_t>(k - 1)];
        const std::string tag = std::string(family_name(f)) + " " + rk(r, k);
        const bool rr = is_real_rooted(p);
        rep.add(tag + " real-rooted", rr);
        if (k < b.kmax) rep.add(tag + " interlaces next", interlaces(p, seq[static_cast<std::size_t>(k)]));
        const Shape s = shape_checks(p);
        rep.add(tag + " unimodal and log-concave", s.unimodal && s.log_concave);
        const Rational mean = moments(p).mean;
        bool near = true;
        for (int mode : s.modes) near = near && abs(Rational(mode) - mean) < 1;
        rep.add(tag + " modes within 1 of the mean", near);
      }
    }
  ConjectureBounds cb;
  cb.roots_mmax = b.mmax;
  cb.roots_nmax = b.nmax;
  rep.append(check_conjecture(Conjecture::real_roots, cb));
  return rep;
}

Report verify_moments(const MomentBounds& b) {
  Report rep;
  rep.title = "moments";
  for (int r = 2; r <= b.rmax; ++r)
    for (Family f : {Family::des, Family::pk, Family::lpk}) {
      const auto seq = c_univar_sequence(r, b.kmax, f);
      const auto rec = mean_via_recurrence(r, b.kmax, f);
      for (int k = 1; k <= b.kmax; ++k) {
        const std::string tag = std::string(family_name(f)) + " " + rk(r, k);
        const Rational mean = moments(seq[static_cast<std::size_t>(k - 1)]).mean;
        const Rational& via = rec[static_cast<std::size_t>(k - 1)];
        rep.add(tag + " recurrence mean", mean == via, to_string(mean) + " vs " + to_string(via));
        if (f == Family::des) rep.add(tag + " closed-form mean", mean == des_mean_closed(r, k), to_string(mean));
        if (r == 2 && f == Family::pk) rep.add(tag + " closed-form mean", mean == pk_mean_closed_r2(k), to_string(mean));
        if (r == 2 && f == Family::lpk) rep.add(tag + " closed-form mean", mean == lpk_mean_closed_r2(k), to_string(mean));
        if (k <= b.gamma_kmax) {
          const double err = std::abs(gamma_mean(r, k, f) - mean.get_d());
          rep.add(tag + " gamma-form mean", err <= b.gamma_tol, "error " + std::to_string(err));
        }
      }
    }
  return rep;
}

Report verify_normality(const std::vector<int>& rs, const std::vector<int>& ks) {
  Report rep;
  rep.title = "normality";
  for (int r : rs)
    for (Family f : {Family::des, Family::pk, Family::lpk}) rep.append(normality_trend(r, f, ks));
  return rep;
}

Report verify_conjectures(const ConjectureBounds& b) {
  Report rep;
  rep.title = "conjectures";
  for (Conjecture c : {Conjecture::lin_cpk, Conjecture::k_clpk, Conjecture::k1_clpk, Conjecture::fib_ides,
                       Conjecture::ipk_linear, Conjecture::real_roots})
    rep.append(check_conjecture(c, b));
  return rep;
}

Report verify_cardinalities(const CardinalityBounds& b) {
  Report rep;
  rep.title = "cardinalities";
  for (int r = 2; r <= b.enum_rmax; ++r)
    for (int k = 1; k <= b.enum_kmax; ++k) {
      const BigInt expected = closed_product(r, k, ClosedProduct::cardinality);
      std::uint64_t np = 0, npi = 0, nq = 0;
      for_each_P(r, k, PMethod::characterization, [&](const std::vector<int>&) { ++np; }, b.max_cardinality);
      for_each_P(r, k, PMethod::insertion, [&](const std::vector<int>&) { ++npi; }, b.max_cardinality);
      for_each_stirling(r, k, [&](const std::vector<int>&) { ++nq; }, b.max_cardinality);
      const bool ok = BigInt(std::to_string(np)) == expected && np == npi && np == nq;
      rep.add(rk(r, k) + " enumerated", ok,
              "|P| " + std::to_string(np) + ", |Q| " + std::to_string(nq) + ", product " + to_string(expected));
    }
  for (int r = 2; r <= b.formula_rmax; ++r) {
    const auto des = c_univar_sequence(r, b.formula_kmax, Family::des);
    for (int k = 1; k <= b.formula_kmax; ++k) {
      const BigInt expected = closed_product(r, k, ClosedProduct::cardinality);
      const bool ok = stirling_cardinality(r, k) == expected && des[static_cast<std::size_t>(k - 1)](1) == expected;
      rep.add(rk(r, k) + " formula", ok, to_string(expected));
    }
  }
  return rep;
}

}  // namespace cstat
