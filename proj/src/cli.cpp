#include "cstat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cstat/analysis.hpp"
#include "cstat/cluster_method.hpp"
#include "cstat/clusters.hpp"
#include "cstat/errors.hpp"
#include "cstat/recurrences.hpp"
#include "cstat/stirling.hpp"
#include "cstat/verify.hpp"

namespace cstat {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";

enum class Format { json, csv, latex };

Json coeff_array(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  if (p.is_zero()) a.push_back("0");
  return a;
}

Json coeff_matrix(const IntBivariate& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.degree_first(); ++i) {
    Json row = Json::array();
    for (int j = 0; j <= p.degree_second(); ++j) row.push_back(to_string(p.coeff(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

std::string power(const std::string& v, int e) {
  if (e == 0) return "";
  if (e == 1) return v;
  return e < 10 ? v + "^" + std::to_string(e) : v + "^{" + std::to_string(e) + "}";
}

// Terms in ascending order: "1+52t+57t^2", "ty+t^2y".
std::string latex_terms(const std::vector<std::pair<BigInt, std::string>>& terms) {
  std::string s;
  for (const auto& [c, mono] : terms) {
    if (c == 0) continue;
    std::string coef = to_string(c);
    if (!mono.empty() && (c == 1 || c == -1)) coef = c == 1 ? "" : "-";
    if (!s.empty() && c > 0) s += "+";
    s += coef + mono;
  }
  return s.empty() ? "0" : s;
}

std::string latex(const IntPolynomial& p, const std::string& v) {
  std::vector<std::pair<BigInt, std::string>> terms;
  for (int i = 0; i <= p.degree(); ++i) {
    std::string mono = power(v, i);
    if (mono.empty() && p.coeff(i) != 0) mono = "";
    terms.emplace_back(p.coeff(i), mono);
  }
  return latex_terms(terms);
}

std::string latex(const IntBivariate& p, const std::string& a, const std::string& b) {
  // Order by total degree, then by the first exponent.
  std::vector<std::pair<BigInt, std::string>> terms;
  const int top = p.degree_first() + p.degree_second();
  for (int d = 0; d <= top; ++d)
    for (int i = 0; i <= d; ++i)
      if (p.coeff(i, d - i) != 0) terms.emplace_back(p.coeff(i, d - i), power(a, i) + power(b, d - i));
  return latex_terms(terms);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

// A computed polynomial with its parameters; exactly one of uni/bi is used.
struct PolyRecord {
  std::string family;
  Json params = Json::object();
  bool bivariate = false;
  IntPolynomial uni;
  IntBivariate bi;
  std::string var1 = "t", var2 = "y";
};

struct Output {
  Format format = Format::json;
  Json doc;
  std::vector<std::string> lines;  // csv and latex
  bool header_written = false;
};

std::string param_values_csv(const Json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) s += csv_escape(v.is_string() ? v.get<std::string>() : v.dump()) + ",";
  return s;
}

std::string param_names_csv(const Json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) s += k + ",";
  return s;
}

void emit(Output& o, const PolyRecord& r) {
  switch (o.format) {
    case Format::json: {
      Json j;
      j["family"] = r.family;
      j["parameters"] = r.params;
      if (r.bivariate) {
        j["variables"] = Json::array({r.var1, r.var2});
        j["coefficients"] = coeff_matrix(r.bi);
      } else {
        j["variables"] = Json::array({r.var1});
        j["coefficients"] = coeff_array(r.uni);
      }
      o.doc["results"].push_back(std::move(j));
      break;
    }
    case Format::csv: {
      if (!o.header_written) {
        o.lines.push_back("family," + param_names_csv(r.params) +
                          (r.bivariate ? r.var1 + "_exponent," + r.var2 + "_exponent," : std::string("exponent,")) +
                          "coefficient");
        o.header_written = true;
      }
      const std::string prefix = csv_escape(r.family) + "," + param_values_csv(r.params);
      if (r.bivariate) {
        for (int i = 0; i <= r.bi.degree_first(); ++i)
          for (int jj = 0; jj <= r.bi.degree_second(); ++jj)
            if (r.bi.coeff(i, jj) != 0)
              o.lines.push_back(prefix + std::to_string(i) + "," + std::to_string(jj) + "," + to_string(r.bi.coeff(i, jj)));
      } else {
        for (int i = 0; i <= r.uni.degree(); ++i)
          o.lines.push_back(prefix + std::to_string(i) + "," + to_string(r.uni.coeff(i)));
      }
      break;
    }
    case Format::latex: {
      std::string label;
      for (const auto& [k, v] : r.params.items()) {
        if (k == "r" || k == "m" || k == "sigma" || k == "method" || k == "stat") continue;
        label += (label.empty() ? "" : ", ") + v.dump();
      }
      const std::string body = r.bivariate ? latex(r.bi, r.var1, r.var2) : latex(r.uni, r.var1);
      o.lines.push_back("$" + label + "$ & $" + body + "$\\\\");
      break;
    }
  }
}

void emit_report(Output& o, const Report& rep) {
  switch (o.format) {
    case Format::json: {
      Json summary;
      summary["verification"] = rep.title;
      summary["passed"] = rep.passed();
      summary["checks"] = rep.items.size();
      summary["failures"] = rep.failures();
      if (!rep.notes.empty()) summary["notes"] = rep.notes;
      Json items = Json::array();
      for (const auto& i : rep.items) {
        Json it;
        it["check"] = i.name;
        it["passed"] = i.passed;
        if (!i.detail.empty()) it["detail"] = i.detail;
        items.push_back(std::move(it));
      }
      summary["items"] = std::move(items);
      o.doc["results"].push_back(std::move(summary));
      break;
    }
    case Format::csv:
      if (!o.header_written) {
        o.lines.push_back("verification,check,passed,detail");
        o.header_written = true;
      }
      for (const auto& i : rep.items)
        o.lines.push_back(csv_escape(rep.title) + "," + csv_escape(i.name) + "," + (i.passed ? "true" : "false") + "," +
                          csv_escape(i.detail));
      break;
    case Format::latex:
      for (const auto& i : rep.items)
        o.lines.push_back(i.name + " & " + (i.passed ? "PASS" : "FAIL") + "\\\\");
      break;
  }
}

void emit_kv(Output& o, const std::string& what, Json record) {
  switch (o.format) {
    case Format::json: o.doc["results"].push_back(std::move(record)); break;
    case Format::csv:
      if (!o.header_written) {
        o.lines.push_back("analysis,key,value");
        o.header_written = true;
      }
      for (const auto& [k, v] : record.items())
        o.lines.push_back(what + "," + k + "," + csv_escape(v.is_string() ? v.get<std::string>() : v.dump()));
      break;
    case Format::latex:
      for (const auto& [k, v] : record.items())
        o.lines.push_back(k + " & " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\\\\");
      break;
  }
}

struct Options {
  std::string format = "json";
  std::string out_path;
  int max_n = -1;
  std::uint64_t max_cardinality = kDefaultMaxCardinality;

  // poly
  std::string family;
  int r = 2, k = 1;
  std::string method;

  // enum / pattern / analyze
  std::string what;
  std::string sigma;
  std::string stat;
  int n = 1;
  bool full = false;
  bool rows = false;
  bool check = false;
  std::string poly;

  // verify
  bool all = false;
  bool failures_only = false;
  ConjectureBounds cb;
  std::string only;
  int egf_order = kDefaultEgfOrder;
  int gjcm_n = 7;
};

int oracle_bound(const Options& o) { return o.max_n >= 0 ? o.max_n : kDefaultOracleBound; }
int cluster_bound(const Options& o) { return o.max_n >= 0 ? o.max_n : kDefaultClusterBound; }

IntPolynomial parse_coefficients(const std::string& text) {
  std::vector<BigInt> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw InvalidInput("empty coefficient in '" + text + "'");
    BigInt v;
    if (v.set_str(item.substr(b, e - b + 1), 10) != 0) throw InvalidInput("bad coefficient '" + item + "'");
    c.push_back(v);
  }
  return IntPolynomial(std::move(c));
}

int cmd_poly(const Options& o, Output& out) {
  const bool brute = o.method == "brute";
  if (!brute && o.method != "fast" && !o.method.empty()) throw InvalidInput("unknown method '" + o.method + "'");
  PolyRecord rec;
  rec.family = o.family;
  rec.params["r"] = o.r;
  rec.params["k"] = o.k;
  rec.params["method"] = brute ? "brute" : "fast";
  if (o.family == "cbivar" || o.family == "ctilde") {
    const bool tilde = o.family == "ctilde";
    rec.bivariate = true;
    rec.bi = brute ? cluster_distribution(o.r, o.k, tilde ? ClusterPair::des_lpk : ClusterPair::des_pk, o.max_cardinality)
                   : c_bivar(o.r, o.k, tilde);
  } else {
    const Family f = parse_family(o.family);
    if (brute) {
      const IntBivariate b = cluster_distribution(o.r, o.k, f == Family::lpk ? ClusterPair::des_lpk : ClusterPair::des_pk,
                                                  o.max_cardinality);
      rec.uni = f == Family::des ? b.second_at_one() : b.first_at_one();
    } else {
      if (o.r < 2 || o.k < 1) throw InvalidInput("need r >= 2 and k >= 1");
      rec.uni = c_univar(o.r, o.k, f);
    }
  }
  emit(out, rec);
  return kExitOk;
}

int cmd_enum(const Options& o, Output& out) {
  Json items = Json::array();
  Json params = Json::object();
  if (o.what == "stirling") {
    params["r"] = o.r;
    params["k"] = o.k;
    for_each_stirling(o.r, o.k, [&](const std::vector<int>& w) { items.push_back(StirlingPermutation(w, o.r, o.k).to_string()); },
                      o.max_cardinality);
  } else if (o.what == "P") {
    params["r"] = o.r;
    params["k"] = o.k;
    const PMethod m = o.method == "insertion" ? PMethod::insertion : PMethod::characterization;
    if (!o.method.empty() && o.method != "insertion" && o.method != "characterization")
      throw InvalidInput("unknown method '" + o.method + "'");
    params["method"] = m == PMethod::insertion ? "insertion" : "characterization";
    for_each_P(o.r, o.k, m, [&](const std::vector<int>& w) { items.push_back(Permutation(w).to_string()); },
               o.max_cardinality);
  } else if (o.what == "clusters") {
    const Permutation sigma = Permutation::parse(o.sigma);
    params["sigma"] = sigma.to_string();
    params["n"] = o.n;
    for_each_marked_cluster(
        sigma, o.n,
        [&](const MarkedCluster& c) {
          Json j;
          j["pi"] = c.pi.to_string();
          j["marks"] = c.marks;
          items.push_back(std::move(j));
        },
        cluster_bound(o));
  } else {
    throw InvalidInput("enum expects stirling, clusters or P");
  }
  switch (out.format) {
    case Format::json: {
      Json j;
      j["family"] = o.what;
      j["parameters"] = params;
      j["count"] = items.size();
      j["items"] = std::move(items);
      out.doc["results"].push_back(std::move(j));
      break;
    }
    case Format::csv:
      out.lines.push_back(param_names_csv(params) + "index,item");
      for (std::size_t i = 0; i < items.size(); ++i) {
        const Json& it = items[i];
        std::string s;
        if (it.is_string()) {
          s = it.get<std::string>();
        } else {
          s = it["pi"].get<std::string>() + " {";
          for (std::size_t m = 0; m < it["marks"].size(); ++m) s += (m ? "," : "") + it["marks"][m].dump();
          s += "}";
        }
        out.lines.push_back(param_values_csv(params) + std::to_string(i) + "," + csv_escape(s));
      }
      break;
    case Format::latex:
      for (const auto& it : items) out.lines.push_back(it.is_string() ? it.get<std::string>() : it.dump());
      break;
  }
  return kExitOk;
}

int cmd_pattern(const Options& o, Output& out) {
  const Permutation sigma = Permutation::parse(o.sigma);
  const auto fam = recognize(sigma);
  if (!fam) throw InvalidInput("pattern must be 2134...m or 12...(m-2)m(m-1) with m >= 3");
  const Stat st = parse_stat(o.stat);
  stat_shift(st);
  if (o.n < 0) throw InvalidInput("n must be non-negative");
  const bool brute = o.method == "brute";
  if (!brute && !o.method.empty() && o.method != "fast" && o.method != "hadamard")
    throw InvalidInput("unknown method '" + o.method + "'");
  const int N = std::max(o.n, 1);
  const int smax = o.full ? max_occurrences(fam->m, N) : 0;
  const StatPolyFamily f = brute ? brute_stat_family(*fam, st, N, smax, oracle_bound(o)) : fast_stat_family(*fam, st, N, smax);
  for (int n = o.rows ? 0 : o.n; n <= o.n; ++n) {
    PolyRecord rec;
    rec.family = std::string(stat_name(st));
    rec.params["sigma"] = sigma.to_string();
    rec.params["stat"] = std::string(stat_name(st));
    rec.params["n"] = n;
    rec.params["method"] = brute ? "brute" : "hadamard";
    if (o.full) {
      rec.bivariate = true;
      rec.bi = f.polys[static_cast<std::size_t>(n)];
      rec.var1 = "s";
      rec.var2 = "t";
    } else {
      rec.uni = f.avoidance(n);
    }
    emit(out, rec);
  }
  return kExitOk;
}

int cmd_analyze(const Options& o, Output& out) {
  IntPolynomial p;
  Json source;
  if (!o.poly.empty()) {
    p = parse_coefficients(o.poly);
    source["polynomial"] = coeff_array(p);
  } else if (!o.family.empty()) {
    p = c_univar(o.r, o.k, parse_family(o.family));
    source["family"] = o.family;
    source["r"] = o.r;
    source["k"] = o.k;
  } else {
    throw InvalidInput("analyze needs --poly or --family with --r and --k");
  }
  if (p.is_zero()) throw InvalidInput("the zero polynomial cannot be analyzed");
  Json rec;
  bool holds = true;
  rec["analysis"] = o.what;
  for (const auto& [key, v] : source.items()) rec[key] = v;
  if (o.what == "roots") {
    rec["degree"] = p.degree();
    holds = is_real_rooted(p);
    rec["real_rooted"] = holds;
    rec["distinct_real_roots"] = count_real_roots(p);
  } else if (o.what == "shape") {
    const Shape s = shape_checks(p);
    rec["unimodal"] = s.unimodal;
    rec["log_concave"] = s.log_concave;
    rec["modes"] = s.modes;
    holds = s.unimodal && s.log_concave;
  } else if (o.what == "moments") {
    const MomentSummary m = moments(p);
    rec["mean"] = to_string(m.mean);
    rec["variance"] = to_string(m.variance);
    rec["std3"] = m.std3;
    rec["std4"] = m.std4;
  } else {
    throw InvalidInput("analyze expects roots, shape or moments");
  }
  emit_kv(out, o.what, std::move(rec));
  return o.check && !holds ? kExitVerificationFailed : kExitOk;
}

Report run_verification(const std::string& what, const Options& o) {
  if (what == "tables") return verify_tables();
  if (what == "equidistribution") {
    EquidistributionBounds b;
    b.max_cardinality = o.max_cardinality;
    if (o.max_n >= 0) b.nmax = o.max_n;
    return verify_equidistribution(b);
  }
  if (what == "gjcm") return verify_gjcm_suite({"213", "2134", "123", "132"}, o.gjcm_n);
  if (what == "egf") return verify_egf({2, 3, 4}, o.egf_order);
  if (what == "gessel-stanley") return verify_gessel_stanley();
  if (what == "sturm") return verify_sturm();
  if (what == "moments") return verify_moments();
  if (what == "normality") return verify_normality();
  if (what == "cardinalities") {
    CardinalityBounds b;
    b.max_cardinality = o.max_cardinality;
    return verify_cardinalities(b);
  }
  if (what == "conjectures") {
    if (!o.only.empty()) return check_conjecture(parse_conjecture(o.only), o.cb);
    return verify_conjectures(o.cb);
  }
  throw InvalidInput("unknown verification '" + what + "'");
}

int cmd_verify(const Options& o, Output& out, std::ostream& err) {
  static const std::vector<std::string> everything = {"tables",  "equidistribution", "gjcm",      "egf",
                                                      "gessel-stanley", "sturm",     "moments",   "normality",
                                                      "conjectures",    "cardinalities"};
  std::vector<std::string> targets;
  if (o.what == "all")
    targets = everything;
  else
    targets.push_back(o.what);
  bool ok = true;
  for (const auto& t : targets) {
    Report rep = run_verification(t, o);
    if (o.failures_only) std::erase_if(rep.items, [](const CheckItem& i) { return i.passed; });
    ok = ok && rep.passed();
    for (const auto& i : rep.items)
      if (!i.passed) err << "FAIL " << rep.title << ": " << i.name << (i.detail.empty() ? "" : " (" + i.detail + ")") << "\n";
    emit_report(out, rep);
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

void write_output(const Output& o, std::ostream& out, const std::string& path) {
  std::string text;
  if (o.format == Format::json) {
    text = o.doc.dump(2) + "\n";
  } else {
    for (const auto& l : o.lines) text += l + "\n";
  }
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open output file '" + path + "'");
    f << text;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cluster and r-Stirling permutation statistics", "clusterstat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
  app.add_option("--max-n", o.max_n, "largest n for brute-force and cluster enumeration");
  app.add_option("--max-cardinality", o.max_cardinality, "largest set size enumerated");
  app.add_option("--out", o.out_path, "write the document to this file");

  auto* poly = app.add_subcommand("poly", "polynomial families from the recurrences");
  poly->add_option("--family", o.family, "cdes, cpk, clpk, cbivar or ctilde")
      ->required()
      ->check(CLI::IsMember({"cdes", "cpk", "clpk", "cbivar", "ctilde"}));
  poly->add_option("--r", o.r)->required();
  poly->add_option("--k", o.k)->required();
  poly->add_option("--method", o.method, "fast or brute");

  auto* en = app.add_subcommand("enum", "enumerate r-Stirling permutations, clusters or P_{r,k}");
  en->add_option("what", o.what, "stirling, clusters or P")->required();
  en->add_option("--r", o.r);
  en->add_option("--k", o.k);
  en->add_option("--sigma", o.sigma);
  en->add_option("--n", o.n);
  en->add_option("--method", o.method, "characterization or insertion");

  auto* pat = app.add_subcommand("pattern", "distributions over pattern-avoiding permutations");
  pat->add_option("--sigma", o.sigma)->required();
  pat->add_option("--stat", o.stat, "ides, ipk or ilpk")->required();
  pat->add_option("--n", o.n)->required();
  pat->add_option("--method", o.method, "hadamard (default), fast or brute");
  pat->add_flag("--full", o.full, "keep the occurrence variable s");
  pat->add_flag("--rows", o.rows, "emit every length from 0 to n");

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("what", o.what,
                  "tables, equidistribution, gjcm, egf, gessel-stanley, sturm, moments, normality, conjectures, "
                  "cardinalities or all")
      ->required();
  ver->add_flag("--all", o.all, "run every instance of the suite");
  ver->add_flag("--failures-only", o.failures_only, "only list failing checks");
  ver->add_option("--only", o.only, "a single conjecture");
  ver->add_option("--r-max", o.cb.rmax);
  ver->add_option("--k-max", o.cb.kmax);
  ver->add_option("--k3-max", o.cb.k3max);
  ver->add_option("--fib-n-max", o.cb.fib_nmax);
  ver->add_option("--m-max", o.cb.mmax);
  ver->add_option("--ipk-n-max", o.cb.ipk_nmax);
  ver->add_option("--roots-m-max", o.cb.roots_mmax);
  ver->add_option("--roots-n-max", o.cb.roots_nmax);
  ver->add_option("--egf-order", o.egf_order);
  ver->add_option("--gjcm-n", o.gjcm_n);

  auto* an = app.add_subcommand("analyze", "roots, coefficient shape or moments of a polynomial");
  an->add_option("what", o.what, "roots, shape or moments")->required();
  an->add_option("--poly", o.poly, "comma-separated coefficients, lowest degree first");
  an->add_option("--family", o.family, "cdes, cpk or clpk");
  an->add_option("--r", o.r);
  an->add_option("--k", o.k);
  an->add_flag("--check", o.check, "exit 1 unless real-rooted (roots) or unimodal and log-concave (shape)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Output output;
  output.format = o.format == "csv" ? Format::csv : o.format == "latex" ? Format::latex : Format::json;
  std::string command;
  for (const auto& a : args) command += (command.empty() ? "" : " ") + a;
  output.doc["schema_version"] = kSchemaVersion;
  output.doc["command"] = command;
  output.doc["results"] = Json::array();

  int code = kExitOk;
  try {
    if (*poly) code = cmd_poly(o, output);
    else if (*en) code = cmd_enum(o, output);
    else if (*pat) code = cmd_pattern(o, output);
    else if (*ver) code = cmd_verify(o, output, err);
    else if (*an) code = cmd_analyze(o, output);
    write_output(output, out, o.out_path);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return code;
}

}  // namespace cstat
