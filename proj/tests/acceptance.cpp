// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "askzeta/ask.hpp"
#include "askzeta/catalog.hpp"
#include "askzeta/closed_forms.hpp"
#include "askzeta/grouporbits.hpp"
#include "askzeta/lie.hpp"
#include "askzeta/structural.hpp"

using namespace askzeta;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

std::int64_t ipow(std::int64_t b, int k) {
  std::int64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

std::string at(const std::string& key, std::int64_t p, int n) {
  return key + " p=" + std::to_string(p) + " n=" + std::to_string(n);
}

// Compare ask coefficients 0..n_max with a rational function.
void compare_series(Outcome& o, const MatrixModule& m, const QTRational& w, std::int64_t p, int n_max,
                    const std::string& key, int& checked, std::optional<mpq_class> c = std::nullopt,
                    AskMethod method = AskMethod::automatic) {
  const auto got = ask_series(m, p, n_max, method);
  const auto want = expand(w, p, n_max + 1, c);
  for (int n = 0; n <= n_max; ++n) {
    ++checked;
    if (got.values[n].value != want.coeffs[n])
      o.fail(at(key, p, n) + ": ask " + got.values[n].value.get_str() + " vs formula " + want.coeffs[n].get_str());
  }
}

bool cheap(const MatrixModule& m, std::int64_t p, int n, std::uint64_t limit) {
  const RingSpec r(p, n);
  return std::min(average_cost(m, r), orbit_cost(m, r)) <= limit;
}

void full_matrix(Outcome& o) {
  int checked = 0;
  for (int d = 1; d <= 3; ++d)
    for (int e = 1; e <= 3; ++e)
      for (std::int64_t p : {2, 3, 5}) {
        int n_max = 0;
        while (n_max < 3 && ipow(p, d * (n_max + 1)) <= 10000000) ++n_max;
        const std::string key = "mat(" + std::to_string(d) + "," + std::to_string(e) + ")";
        compare_series(o, catalog_module(key), mat_form(d, e), p, n_max, key, checked);
      }
  o.detail << checked << " coefficients";
}

void engines(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-5, 5);
  int modules = 0, checked = 0;
  while (modules < 25) {
    const std::size_t d = 1 + rng() % 3, e = 1 + rng() % 3, l = 1 + rng() % 4;
    std::vector<IntMatrix> span;
    for (std::size_t k = 0; k < l; ++k) {
      IntMatrix a(d, e);
      for (auto& x : a.entries()) x = entry(rng);
      span.push_back(a);
    }
    const MatrixModule m(d, e, span);
    ++modules;
    for (std::int64_t p : {2, 3})
      for (int n = 1; n <= 2; ++n) {
        const RingSpec ring(p, n);
        ++checked;
        const mpq_class a = ask_average(m, ring), b = ask_orbit(m, ring);
        if (a != b) o.fail("module " + std::to_string(modules) + " " + at("", p, n));
      }
  }
  o.detail << modules << " random modules, " << checked << " (p, n) pairs";
}

void families(Outcome& o) {
  std::vector<std::string> keys;
  for (int d = 1; d <= 4; ++d) keys.push_back("so(" + std::to_string(d) + ")");
  for (int d = 1; d <= 3; ++d) keys.push_back("sl(" + std::to_string(d) + ")");
  for (int d = 1; d <= 3; ++d) keys.push_back("sym(" + std::to_string(d) + ")");
  keys.push_back("sp(2)");
  keys.push_back("sp(4)");
  for (int d = 1; d <= 4; ++d) keys.push_back("n(" + std::to_string(d) + ")");
  for (int d = 1; d <= 4; ++d) keys.push_back("tr(" + std::to_string(d) + ")");
  for (int d = 1; d <= 3; ++d) keys.push_back("diag(" + std::to_string(d) + ")");
  int checked = 0;
  for (const auto& key : keys) {
    const auto entry = closed_form(key);
    for (std::int64_t p : {3, 5}) {
      if (!validity_holds(entry, p)) o.fail(key + " not claimed valid at p=" + std::to_string(p));
      compare_series(o, catalog_module(key), entry.formula, p, 2, key, checked);
    }
  }
  o.detail << keys.size() << " modules, " << checked << " coefficients";
}

QTRational brenti_form(int d) {
  // B_d(-1/q, T)/(1 - T)^(d + 1)
  QTPoly num;
  const Poly b = brenti_polynomial(d);
  for (const auto& [exps, c] : b.terms())
    num += QTPoly::monomial(-exps[0], exps[1], 0, exps[0] % 2 ? mpz_class(-c) : c);
  return QTRational(num) / one_minus(0, 1).pow(d + 1);
}

void brenti(Outcome& o) {
  for (int n = 1; n <= 4; ++n)
    if (!brenti_identity_check(n, 6)) o.fail("identity for n=" + std::to_string(n));
  int checked = 0;
  for (int d = 1; d <= 4; ++d) {
    const std::string key = "diag(" + std::to_string(d) + ")";
    if (!(brenti_form(d) == closed_form(key).formula)) o.fail(key + " catalog formula");
    for (std::int64_t q : {3, 5}) compare_series(o, catalog_module(key), brenti_form(d), q, 2, key, checked);
  }
  o.detail << "identities n<=4 to order 6, " << checked << " diagonal coefficients";
}

void functional_equations(Outcome& o) {
  int checked = 0;
  for (const auto& key : closed_form_keys()) {
    const auto e = closed_form(key);
    if (e.kind != ZetaKind::ask) continue;
    ++checked;
    if (!functional_equation_check(e.formula, e.feqn_d)) o.fail(key);
  }
  for (int d = 1; d <= 3; ++d)
    if (functional_equation_check(QTRational::parse("1/(1 - T)"), d)) o.fail("negative control d=" + std::to_string(d));
  o.detail << checked << " ask entries; control 1/(1-T) rejected for d=1..3";
}

void structural(Outcome& o) {
  std::vector<std::string> certify = {"so(3)", "so(4)", "sym(2)", "sym(3)", "sp(4)", "sl(3)", "gl(1)", "gl(2)", "gl(3)"};
  std::vector<std::string> reject = {"n(2)", "n(3)", "n(4)", "diag(2)", "diag(3)"};
  std::vector<std::string> kmin = {"band(1)", "band(2)", "band(3)"};
  int checked = 0;
  auto templates = [&](const std::string& key, const PredicateResult& r, const StructureReport& rep) {
    if (!rep.template_formula) {
      o.fail(key + " certified without template");
      return;
    }
    for (std::int64_t p : {3, 5}) {
      if (!r.valid_at(p)) continue;
      int n_max = 0;
      while (n_max < 2 && cheap(catalog_module(key), p, n_max + 1, 3000000)) ++n_max;
      compare_series(o, catalog_module(key), *rep.template_formula, p, n_max, key + " template", checked);
    }
  };
  for (const auto& key : certify) {
    const auto rep = structure_report(catalog_module(key));
    if (rep.o_maximal.status != Tri::certified) {
      o.fail(key + " not certified O-maximal: " + rep.o_maximal.reason);
      continue;
    }
    templates(key, rep.o_maximal, rep);
  }
  for (const auto& key : reject) {
    const auto r = check_o_maximal(catalog_module(key));
    if (r.status == Tri::certified) o.fail(key + " certified O-maximal");
  }
  for (const auto& key : kmin) {
    const auto rep = structure_report(catalog_module(key));
    if (rep.k_minimal.status != Tri::certified) {
      o.fail(key + " not certified K-minimal: " + rep.k_minimal.reason);
      continue;
    }
    templates(key, rep.k_minimal, rep);
  }
  o.detail << certify.size() << " O-maximal, " << reject.size() << " rejected, " << kmin.size() << " K-minimal, "
           << checked << " template coefficients";
}

void wild(Outcome& o) {
  int checked = 0;
  // Ex 8.1 against enumeration
  compare_series(o, catalog_module("ex_unbounded"), closed_form("ex_unbounded").formula, 5, 2, "ex_unbounded", checked);
  compare_series(o, catalog_module("ex_unbounded"), closed_form("ex_unbounded").formula, 7, 2, "ex_unbounded", checked);

  // Ex 8.2 with c counted on the curve
  const auto ell = closed_form("ex_elliptic");
  const auto printed = QTRational::parse(ell.printed_formula);
  for (std::int64_t p : {5, 7}) {
    const std::int64_t c = elliptic_point_count(p);
    if (c != 8) o.fail("c(" + std::to_string(p) + ") = " + std::to_string(c));
    compare_series(o, catalog_module("ex_elliptic"), ell.formula, p, 2, "ex_elliptic", checked, mpq_class(c));
    const mpq_class brute = ask_value(catalog_module("ex_elliptic"), RingSpec(p, 1), AskMethod::automatic).value;
    const mpq_class verbatim = expand(printed, p, 2, mpq_class(c)).coeffs[1];
    if (verbatim == brute) o.fail("printed text unexpectedly matches at p=" + std::to_string(p));
  }

  // Ex 8.3 T coefficient against the orbit engine
  for (std::int64_t q : {5, 7}) {
    const mpq_class qq = q;
    const mpq_class want = 2 * qq * qq + 4 * qq + 4 / qq - 1 / (qq * qq) - 8;
    const mpq_class got = ask_orbit(catalog_module("ex_non_lie"), RingSpec(q, 1));
    ++checked;
    if (got != want) o.fail("ex_non_lie T coefficient q=" + std::to_string(q) + ": " + got.get_str());
    if (expand(closed_form("ex_non_lie").formula, q, 2).coeffs[1] != want) o.fail("ex_non_lie formula q=" + std::to_string(q));
  }

  // Ex 8.3 / 8.4 at n = 2, p = 5; p = 7 would take minutes on one core
  for (const char* key : {"ex_non_lie", "ex_L56"}) {
    compare_series(o, catalog_module(key), closed_form(key).formula, 5, 2, key, checked, std::nullopt, AskMethod::average);
    compare_series(o, catalog_module(key), closed_form(key).formula, 7, 1, key, checked);
  }
  o.detail << checked << " coefficients; ex_elliptic stored with c-2 in place of the printed c;";

  // p = 3 may be below the threshold: record only
  for (const char* key : {"ex_non_lie", "ex_L56"}) {
    Outcome scratch;
    int n3 = 0;
    compare_series(scratch, catalog_module(key), closed_form(key).formula, 3, 2, key, n3, std::nullopt, AskMethod::average);
    o.detail << " " << key << " p=3 " << (scratch.pass ? "matches" : "MISMATCH (recorded, not failed)");
  }
}

void group_bridge(Outcome& o) {
  const auto l = catalog_module("L_{3,2}");
  const auto h = graaf_algebra(3, 2);
  const auto table = closed_form("cc:L_{3,2}").formula;
  int checked = 0;
  std::vector<mpz_class> at5;
  for (std::int64_t p : {5, 7}) {
    const auto direct = cc_coefficients_direct(l, p, 2);
    const auto bridge = cc_via_ask(l, p, 2);
    const auto abstract = cc_via_ask(h, p, 2);
    const auto formula = expand(table, p, 3);
    for (int n = 0; n <= 2; ++n) {
      ++checked;
      const mpq_class want = formula.coeffs[n];
      if (mpq_class(direct[n]) != want || bridge.series.values[n].value != want ||
          abstract.series.values[n].value != want)
        o.fail(at("L_{3,2}", p, n));
    }
    if (p == 5) at5 = direct;
  }
  if (at5.size() != 3 || at5[1] != 29 || at5[2] != 745) o.fail("L_{3,2} at p=5 is not 1, 29, 745");
  for (const char* key : {"n(2)", "n(3)"}) {
    const auto m = catalog_module(key);
    const auto oc = oc_coefficients(exp_generators(m, RingSpec(5, 2)), 5, 2);
    const auto via = oc_via_ask(m, 5, 2);
    for (int n = 0; n <= 2; ++n) {
      ++checked;
      if (mpq_class(oc[n]) != via.series.values[n].value) o.fail(at(key, 5, n));
    }
  }
  o.detail << checked << " coefficients; k(G) at p=5: 1, 29, 745";
}

void orbit_examples(Outcome& o) {
  const auto gl = oc_coefficients(gl_generators(2, 3), 3, 2);
  if (gl != std::vector<mpz_class>{1, 2, 3}) o.fail("GL_2 at p=3");
  if (expand(closed_form("oc:gl(2)").formula, 3, 3).coeffs != std::vector<mpq_class>{1, 2, 3}) o.fail("oc:gl(2) formula");
  const GroupGenSet minus{1, {IntMatrix{{-1}}}, "minus one"};
  for (std::int64_t q : {5, 7}) {
    const auto c = oc_coefficients(minus, q, 1);
    if (c[1] != 1 + (q - 1) / 2) o.fail("{-1} at q=" + std::to_string(q));
    if (expand(closed_form("oc:minus_one").formula, q, 2).coeffs[1] != mpq_class(c[1])) o.fail("oc:minus_one formula");
  }
  const GroupGenSet swap{2, {IntMatrix{{0, 1}, {1, 0}}}, "swap"};
  const auto s = oc_coefficients(swap, 3, 2);
  const auto sf = expand(closed_form("oc:swap").formula, 3, 3);
  for (int n = 1; n <= 2; ++n) {
    const std::int64_t q = ipow(3, n);
    if (s[n] != q * (q + 1) / 2) o.fail("swap at n=" + std::to_string(n));
    if (sf.coeffs[n] != mpq_class(s[n])) o.fail("oc:swap formula");
  }
  o.detail << "GL_2: 1, 2, 3; {-1}: 3, 4; swap: " << s[1] << ", " << s[2];
}

void properties(Outcome& o) {
  const std::string cmd = std::string(ASKZETA_TEST_BINARY) + " -ts=properties -m > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc != 0) o.fail("property suite exit status " + std::to_string(rc));
  o.detail << "askzeta_tests -ts=properties";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"full matrix formula", full_matrix},
      {"engine agreement", engines},
      {"classical families", families},
      {"Brenti identity and diagonal algebras", brenti},
      {"functional equation", functional_equations},
      {"structural certificates", structural},
      {"wild examples", wild},
      {"group bridge", group_bridge},
      {"orbit-counting examples", orbit_examples},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << " ("
              << o.detail.str() << "; " << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
  }
  return failures ? 1 : 0;
}
