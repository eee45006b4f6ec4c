#include "askzeta/closed_forms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "askzeta/catalog.hpp"
#include "askzeta/error.hpp"
#include "askzeta/ring.hpp"

namespace askzeta {

std::string to_string(ZetaKind k) {
  switch (k) {
    case ZetaKind::ask: return "ask";
    case ZetaKind::cc: return "cc";
    case ZetaKind::oc: return "oc";
  }
  return "?";
}

QTRational mat_form(int d, int e) { return one_minus(-e, 1) / (one_minus(0, 1) * one_minus(d - e, 1)); }

QTRational constant_rank_form(int d, int l, int r) {
  if (l < 1 || r < 0) throw InputError("constant_rank_form: need l >= 1 and r >= 0");
  return one_minus(d - l - r, 1) / (one_minus(d - l, 1) * one_minus(d - r, 1));
}

Poly brenti_polynomial(int n) {
  if (n < 0 || n > 8) throw BudgetExceeded("brenti_polynomial: n must be in [0, 8]");
  Poly b(2);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      int negatives = 0, descents = 0, prev = 0;
      for (int i = 0; i < n; ++i) {
        const int v = (mask >> i & 1) ? -perm[i] : perm[i];
        if (v < 0) ++negatives;
        if (prev > v) ++descents;
        prev = v;
      }
      b += Poly::monomial({negatives, descents}, 1);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return b;
}

namespace {

mpz_class binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

bool brenti_identity_check(int n, int order, const Poly& candidate) {
  if (n < 0 || order < 0) throw InputError("brenti_identity_check: negative argument");
  const Poly x = Poly::variable(1, 0), one = Poly::constant(1, 1);
  // Coefficient of Y^k in the candidate, as a polynomial in X.
  std::map<int, Poly> by_y;
  for (const auto& [e, c] : candidate.terms()) {
    auto [it, _] = by_y.try_emplace(e[1], Poly(1));
    it->second += Poly::monomial({e[0]}, c);
  }
  for (int i = 0; i < order; ++i) {
    Poly lhs = one;
    const Poly base = Poly::constant(1, i) * (x + one) + one;
    for (int k = 0; k < n; ++k) lhs = lhs * base;
    Poly rhs(1);
    for (const auto& [k, coeff] : by_y)
      if (k <= i) rhs += Poly::constant(1, binomial(i - k + n, n)) * coeff;
    if (!(lhs - rhs).is_zero()) return false;
  }
  return true;
}

bool brenti_identity_check(int n, int order) { return brenti_identity_check(n, order, brenti_polynomial(n)); }

std::int64_t elliptic_point_count(std::int64_t p) {
  if (!is_prime(p)) throw InputError("elliptic_point_count: p must be prime");
  std::vector<int> squares(p, 0);
  for (std::int64_t y = 0; y < p; ++y) ++squares[(y * y) % p];
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = (((x * x) % p * x - x) % p + p) % p;
    count += squares[rhs];
  }
  return count;
}

namespace {

QTRational diag_form(int d) {
  const Poly b = brenti_polynomial(d);
  QTPoly num;
  for (const auto& [e, c] : b.terms()) num += QTPoly::monomial(-e[0], e[1], 0, e[0] % 2 ? mpz_class(-c) : c);
  return QTRational(num) / one_minus(0, 1).pow(d + 1);
}

const char* const kEx83Numerator =
    "q^2 - T + 4*q*T - 8*q^2*T + 2*q^3*T + q^4*T - q*T^2 + 2*q^2*T^2 + 6*q^3*T^2 - 5*q^4*T^2 - 6*q^5*T^2 "
    "+ 2*q^6*T^2 + q^2*T^3 - 3*q^3*T^3 - 3*q^4*T^3 + 12*q^5*T^3 + 9*q^6*T^3 - 14*q^7*T^3 + 3*q^8*T^3 + "
    "q^4*T^4 - 14*q^6*T^4 - 5*q^7*T^4 + 41*q^8*T^4 - 26*q^9*T^4 + 4*q^10*T^4 + q^5*T^5 - 4*q^6*T^5 + "
    "14*q^7*T^5 - 12*q^8*T^5 - 46*q^9*T^5 + 73*q^10*T^5 - 32*q^11*T^5 + 3*q^12*T^5 - q^7*T^6 + 2*q^8*T^6 "
    "+ 7*q^9*T^6 + 24*q^10*T^6 - 103*q^11*T^6 + 98*q^12*T^6 - 29*q^13*T^6 + 2*q^14*T^6 - 2*q^9*T^7 + "
    "2*q^10*T^7 - 6*q^11*T^7 + 89*q^12*T^7 - 176*q^13*T^7 + 115*q^14*T^7 - 25*q^15*T^7 + 2*q^16*T^7 + "
    "q^11*T^8 - 8*q^12*T^8 - 35*q^13*T^8 + 178*q^14*T^8 - 223*q^15*T^8 + 100*q^16*T^8 - 16*q^17*T^8 + "
    "q^18*T^8 - q^13*T^9 + 15*q^14*T^9 - 119*q^15*T^9 + 262*q^16*T^9 - 214*q^17*T^9 + 61*q^18*T^9 - "
    "3*q^19*T^9 - q^15*T^10 + 39*q^16*T^10 - 176*q^17*T^10 + 280*q^18*T^10 - 176*q^19*T^10 + 39*q^20*T^10 "
    "- q^21*T^10 - 3*q^17*T^11 + 61*q^18*T^11 - 214*q^19*T^11 + 262*q^20*T^11 - 119*q^21*T^11 + "
    "15*q^22*T^11 - q^23*T^11 + q^18*T^12 - 16*q^19*T^12 + 100*q^20*T^12 - 223*q^21*T^12 + 178*q^22*T^12 "
    "- 35*q^23*T^12 - 8*q^24*T^12 + q^25*T^12 + 2*q^20*T^13 - 25*q^21*T^13 + 115*q^22*T^13 - "
    "176*q^23*T^13 + 89*q^24*T^13 - 6*q^25*T^13 + 2*q^26*T^13 - 2*q^27*T^13 + 2*q^22*T^14 - 29*q^23*T^14 "
    "+ 98*q^24*T^14 - 103*q^25*T^14 + 24*q^26*T^14 + 7*q^27*T^14 + 2*q^28*T^14 - q^29*T^14 + 3*q^24*T^15 "
    "- 32*q^25*T^15 + 73*q^26*T^15 - 46*q^27*T^15 - 12*q^28*T^15 + 14*q^29*T^15 - 4*q^30*T^15 + q^31*T^15 "
    "+ 4*q^26*T^16 - 26*q^27*T^16 + 41*q^28*T^16 - 5*q^29*T^16 - 14*q^30*T^16 + q^32*T^16 + 3*q^28*T^17 - "
    "14*q^29*T^17 + 9*q^30*T^17 + 12*q^31*T^17 - 3*q^32*T^17 - 3*q^33*T^17 + q^34*T^17 + 2*q^30*T^18 - "
    "6*q^31*T^18 - 5*q^32*T^18 + 6*q^33*T^18 + 2*q^34*T^18 - q^35*T^18 + q^32*T^19 + 2*q^33*T^19 - "
    "8*q^34*T^19 + 4*q^35*T^19 - q^36*T^19 + q^34*T^20";

struct Fixed {
  const char* formula;
  const char* module_ref;
  const char* validity;
  ZetaKind kind;
  int feqn_d;
  std::vector<std::int64_t> tested_at;
  bool elliptic = false;
  const char* printed = "";
  const char* note = "";
};

const std::map<std::string, Fixed>& fixed_entries() {
  static const std::string ex83 = std::string("(") + kEx83Numerator +
                                  ")/(q^2*(1 - q^10*T^5)*(1 - q^8*T^4)*(1 - q^5*T^3)*(1 - q^4*T^2)^2*"
                                  "(1 - q^3*T^2)*(1 - q^2*T)*(1 - q*T)^2)";
  static const std::string ex83_printed = "-" + ex83;
  static const char* kLarge = "p sufficiently large (threshold unknown)";
  static const char* kTable1 = "almost all p; p >= d for the group";
  static const std::map<std::string, Fixed> table = {
      {"ex_unbounded",
       {"(1 + 5*q^-1*T - 12*q^-2*T + 5*q^-3*T + q^-4*T^2)/((1 - q^-1*T)*(1 - T)^2)", "ex_unbounded", kLarge,
        ZetaKind::ask, 3, {5, 7}}},
      {"ex_elliptic",
       {"(1 + ((c - 2)*q^-1 - 1 - 2*(c - 2)*q^-2 + 2*q^-1 + (c - 2)*q^-3 - 4*q^-2)*T + q^-3*T^2 + q^-3*T)/(1 - T)^3",
        "ex_elliptic", kLarge, ZetaKind::ask, 3, {5, 7}, true,
        "(1 + (c*q^-1 - 1 - 2*c*q^-2 + 2*q^-1 + c*q^-3 - 4*q^-2)*T + q^-3*T^2 + q^-3*T)/(1 - T)^3",
        "printed formula agrees with enumeration only when its c is #E(F_q) - 2; stored with that substitution"}},
      {"ex_non_lie", {ex83.c_str(), "ex_non_lie", "p odd and sufficiently large (threshold unknown)", ZetaKind::ask,
                      6, {5, 7}, false, ex83_printed.c_str(),
                      "printed numerator has constant term -q^2, giving W(0) = -1; stored negated"}},
      {"ex_L56",
       {"(q^8*T^7 - 3*q^8*T^6 + q^8*T^5 + q^7*T^6 + 2*q^7*T^5 - 2*q^6*T^5 - 2*q^6*T^4 - q^5*T^5 + 6*q^5*T^4 - "
        "3*q^4*T^4 - 3*q^4*T^3 + 6*q^3*T^3 - q^3*T^2 - 2*q^2*T^3 - 2*q^2*T^2 + 2*q*T^2 + q*T + T^2 - 3*T + 1)/"
        "((1 - q^5*T^3)*(1 - q^4*T^2)*(1 - q^2*T)*(1 - q*T)^2)",
        "ex_L56", "p odd and sufficiently large (threshold unknown)", ZetaKind::ask, 5, {5, 7}}},
      {"oc:gl(2)", {"1/(1 - T)^2", "gl generators, d = 2", "all p", ZetaKind::oc, 0, {}}},
      {"oc:minus_one", {"(2 - q*T - T)/(2*(1 - q*T)*(1 - T))", "{-1} in GL_1", "p odd", ZetaKind::oc, 0, {}}},
      {"oc:swap", {"(2 - q^2*T - q*T)/(2*(1 - q^2*T)*(1 - q*T))", "swap in GL_2", "all p", ZetaKind::oc, 0, {}}},
      {"cc:L_{1,1}", {"1/(1 - q*T)", "L_{1,1}", kTable1, ZetaKind::cc, 1, {}}},
      {"cc:L_{2,1}", {"1/(1 - q^2*T)", "L_{2,1}", kTable1, ZetaKind::cc, 2, {}}},
      {"cc:L_{3,1}", {"1/(1 - q^3*T)", "L_{3,1}", kTable1, ZetaKind::cc, 3, {}}},
      {"cc:L_{3,2}", {"(1 - T)/((1 - q^2*T)*(1 - q*T))", "L_{3,2}", kTable1, ZetaKind::cc, 3, {}}},
      {"cc:L_{4,1}", {"1/(1 - q^4*T)", "L_{4,1}", kTable1, ZetaKind::cc, 4, {}}},
      {"cc:L_{4,2}", {"(1 - q*T)/((1 - q^3*T)*(1 - q^2*T))", "L_{4,2}", kTable1, ZetaKind::cc, 4, {}}},
      {"cc:L_{4,3}", {"(1 - T)/(1 - q^2*T)^2", "L_{4,3}", kTable1, ZetaKind::cc, 4, {}}},
      {"cc:L_{5,1}", {"1/(1 - q^5*T)", "L_{5,1}", kTable1, ZetaKind::cc, 5, {}}},
      {"cc:L_{5,2}", {"(1 - q^2*T)/((1 - q^4*T)*(1 - q^3*T))", "L_{5,2}", kTable1, ZetaKind::cc, 5, {}}},
      {"cc:L_{5,3}", {"(1 - q*T)/(1 - q^3*T)^2", "L_{5,3}", kTable1, ZetaKind::cc, 5, {}}},
      {"cc:L_{5,4}", {"(1 - T)/((1 - q^4*T)*(1 - q*T))", "L_{5,4}", kTable1, ZetaKind::cc, 5, {}}},
      {"cc:L_{5,5}",
       {"(1 - T - q*T + q^2*T + q^2*T^2 - q^3*T^2 - q^4*T^2 + q^4*T^3)/((1 - q^5*T^2)*(1 - q^3*T)*(1 - q*T))",
        "L_{5,5}", kTable1, ZetaKind::cc, 5, {}}},
      {"cc:L_{5,6}",
       {"(1 - 2*T + q*T^2 + q^2*T - 2*q^3*T^2 + q^3*T^3)/((1 - q^5*T^2)*(1 - q^2*T)*(1 - q*T))", "L_{5,6}", kTable1,
        ZetaKind::cc, 5, {}}},
      {"cc:L_{5,7}", {"(1 - T)/((1 - q^3*T)*(1 - q^2*T))", "L_{5,7}", kTable1, ZetaKind::cc, 5, {}}},
      {"cc:L_{5,8}", {"(1 - q*T)/(1 - q^3*T)^2", "L_{5,8}", kTable1, ZetaKind::cc, 5, {}}},
      {"cc:L_{5,9}", {"(1 - T)/((1 - q^3*T)*(1 - q^2*T))", "L_{5,9}", kTable1, ZetaKind::cc, 5, {}}},
  };
  return table;
}

struct Table2Row {
  std::vector<const char*> names;
  const char* formula;
};

const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows = {
      {{"L_{6,10}", "L_{6,25}", "L_{6,26}"}, "(1 - q*T)/((1 - q^4*T)*(1 - q^3*T))"},
      {{"L_{6,11}", "L_{6,12}", "L_{6,20}"},
       "(1 - 2*q*T + q^2*T + q^4*T^2 - 2*q^5*T^2 + q^6*T^3)/((1 - q^6*T^2)*(1 - q^3*T)^2)"},
      {{"L_{6,16}"}, "(1 - q*T)*(1 - T)/((1 - q^2*T)^2*(1 - q^3*T))"},
      {{"L_{6,17}"},
       "(1 - T - q*T + q^2*T + q^3*T^2 - q^4*T^2 - q^5*T^2 + q^5*T^3)/((1 - q^6*T^2)*(1 - q^3*T)*(1 - q^2*T))"},
      {{"L_{6,18}"}, "(1 - T)/((1 - q^2*T)*(1 - q^4*T))"},
      {{"L_{6,19}(0)"},
       "(1 + T - 3*q*T - q^2*T + q^3*T^2 + 3*q^4*T^2 - q^5*T^2 - q^5*T^3)/((1 - q^3*T)^3*(1 - q^2*T))"},
      {{"L_{6,19}(-1)", "L_{6,21}(0)"}, "(1 - q*T)^2/((1 - q^3*T)^2*(1 - q^2*T))"},
      {{"L_{6,21}(1)"},
       "(1 - T - q*T + q^2*T + q^2*T^2 - q^3*T^2 - q^4*T^2 + q^4*T^3)/((1 - q^5*T^2)*(1 - q^3*T)*(1 - q^2*T))"},
      {{"L_{6,22}(0)"},
       "(1 - q*T - q^2*T + q^3*T + q^4*T^2 - q^5*T^2 - q^6*T^2 + q^7*T^3)/((1 - q^7*T^2)*(1 - q^4*T)*(1 - q^2*T))"},
      {{"L_{6,23}", "L_{6,24}(0)"},
       "(1 - 2*q*T + q^3*T + q^3*T^2 - 2*q^5*T^2 + q^6*T^3)/((1 - q^7*T^2)*(1 - q^3*T)*(1 - q^2*T))"},
  };
  return rows;
}

CatalogEntry family_entry(const std::string& key) {
  const auto k = parse_catalog_key(key);
  auto arg = [&](std::size_t i) {
    if (i >= k.args.size()) throw InputError("closed form '" + key + "': missing argument");
    return k.args[i];
  };
  auto arity = [&](std::size_t n) {
    if (k.args.size() != n) throw InputError("closed form '" + key + "': wrong number of arguments");
    for (int a : k.args)
      if (a < 1 && k.name != "constant_rank") throw InputError("closed form '" + key + "': dimensions must be positive");
  };
  CatalogEntry e;
  e.key = key;
  e.module_ref = key;
  e.kind = ZetaKind::ask;
  e.validity = "all p";
  if (k.name == "mat") {
    arity(2);
    e.formula = mat_form(arg(0), arg(1));
    e.feqn_d = arg(0);
  } else if (k.name == "gl") {
    arity(1);
    e.formula = mat_form(arg(0), arg(0));
    e.feqn_d = arg(0);
  } else if (k.name == "sl") {
    arity(1);
    const int d = arg(0);
    e.formula = d == 1 ? QTRational(1) / one_minus(1, 1) : one_minus(-d, 1) / one_minus(0, 1).pow(2);
    e.feqn_d = d;
  } else if (k.name == "so") {
    arity(1);
    const int d = arg(0);
    e.formula = one_minus(1 - d, 1) / (one_minus(0, 1) * one_minus(1, 1));
    e.validity = "p odd";
    e.feqn_d = d;
  } else if (k.name == "sym") {
    arity(1);
    e.formula = one_minus(-arg(0), 1) / one_minus(0, 1).pow(2);
    e.validity = "p odd";
    e.feqn_d = arg(0);
  } else if (k.name == "sp") {
    arity(1);
    if (arg(0) % 2) throw InputError("closed form 'sp': size must be even");
    e.formula = one_minus(-arg(0), 1) / one_minus(0, 1).pow(2);
    e.validity = "p odd";
    e.feqn_d = arg(0);
  } else if (k.name == "n") {
    arity(1);
    const int d = arg(0);
    e.formula = one_minus(0, 1).pow(d - 1) / one_minus(1, 1).pow(d);
    e.feqn_d = d;
  } else if (k.name == "tr") {
    arity(1);
    const int d = arg(0);
    e.formula = one_minus(-1, 1).pow(d) / one_minus(0, 1).pow(d + 1);
    e.feqn_d = d;
  } else if (k.name == "diag") {
    arity(1);
    e.formula = diag_form(arg(0));
    e.feqn_d = arg(0);
  } else if (k.name == "band") {
    arity(1);
    const int r = arg(0);
    e.formula = one_minus(-1, 1) / one_minus(r - 1, 1).pow(2);
    e.feqn_d = 2 * r - 1;
  } else if (k.name == "zero") {
    arity(2);
    e.formula = QTRational(1) / one_minus(arg(0), 1);
    e.feqn_d = arg(0);
  } else if (k.name == "constant_rank") {
    arity(3);
    e.formula = constant_rank_form(arg(0), arg(1), arg(2));
    e.module_ref = "none (template)";
    e.validity = "K-minimal modules of constant rank r, almost all p";
    e.feqn_d = arg(0);
  } else {
    throw InputError("unknown closed form '" + key + "'");
  }
  return e;
}

}  // namespace

CatalogEntry closed_form(const std::string& key) {
  const auto& fixed = fixed_entries();
  if (auto it = fixed.find(key); it != fixed.end()) {
    const Fixed& f = it->second;
    CatalogEntry e;
    e.key = key;
    e.formula = QTRational::parse(f.formula);
    e.module_ref = f.module_ref;
    e.validity = f.validity;
    e.kind = f.kind;
    e.feqn_d = f.feqn_d;
    e.tested_at = f.tested_at;
    e.uses_elliptic_count = f.elliptic;
    e.printed_formula = f.printed;
    e.note = f.note;
    return e;
  }
  if (key.rfind("cc:", 0) == 0) {
    const std::string name = key.substr(3);
    for (const auto& row : table2())
      for (const char* n : row.names)
        if (name == n) {
          CatalogEntry e;
          e.key = key;
          e.formula = QTRational::parse(row.formula);
          e.module_ref = "none (cc-zeta)";
          e.validity = "almost all p (threshold unknown)";
          e.kind = ZetaKind::cc;
          e.feqn_d = 6;
          return e;
        }
    throw InputError("unknown closed form '" + key + "'");
  }
  return family_entry(key);
}

std::vector<std::string> closed_form_keys() {
  std::vector<std::string> keys;
  for (int d = 1; d <= 3; ++d)
    for (int e = 1; e <= 3; ++e) keys.push_back("mat(" + std::to_string(d) + "," + std::to_string(e) + ")");
  for (int d = 1; d <= 4; ++d)
    for (const char* f : {"gl", "sl", "so", "sym", "n", "tr", "diag"})
      keys.push_back(std::string(f) + "(" + std::to_string(d) + ")");
  for (int d : {2, 4, 6}) keys.push_back("sp(" + std::to_string(d) + ")");
  for (int r = 1; r <= 4; ++r) keys.push_back("band(" + std::to_string(r) + ")");
  for (const auto& [k, v] : fixed_entries()) keys.push_back(k);
  for (const auto& row : table2())
    for (const char* n : row.names) keys.push_back(std::string("cc:") + n);
  return keys;
}

bool validity_holds(const CatalogEntry& e, std::int64_t p) {
  if (!e.tested_at.empty()) return std::find(e.tested_at.begin(), e.tested_at.end(), p) != e.tested_at.end();
  if (e.validity.rfind("p odd", 0) == 0) return p != 2;
  if (e.validity.find("threshold unknown") != std::string::npos) return false;
  return true;
}

}  // namespace askzeta
