#include "askzeta/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "askzeta/error.hpp"
#include "askzeta/linalg.hpp"

namespace askzeta {

// ---------------------------------------------------------------------------
// QTPoly

QTPoly::QTPoly(long c) {
  if (c) terms_[{0, 0, 0}] = c;
}

QTPoly QTPoly::constant(const mpz_class& c) {
  QTPoly p;
  if (c != 0) p.terms_[{0, 0, 0}] = c;
  return p;
}

QTPoly QTPoly::monomial(int q, int t, int c, const mpz_class& coeff) {
  QTPoly p;
  if (coeff != 0) p.terms_[{q, t, c}] = coeff;
  return p;
}

bool QTPoly::has_c() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first[2] != 0; });
}

QTPoly::Exps QTPoly::min_exponents() const {
  if (terms_.empty()) return {0, 0, 0};
  Exps m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

mpz_class QTPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void QTPoly::add_term(const Exps& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QTPoly operator-(const QTPoly& a) {
  QTPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
  QTPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

QTPoly QTPoly::shifted(const Exps& by) const {
  QTPoly r;
  for (const auto& [e, c] : terms_) r.terms_[{e[0] + by[0], e[1] + by[1], e[2] + by[2]}] = c;
  return r;
}

QTPoly QTPoly::divided_by(const mpz_class& d) const {
  QTPoly r;
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw InternalError("QTPoly: inexact division");
    r.terms_[e] = c / d;
  }
  return r;
}

QTPoly QTPoly::inverted() const {
  QTPoly r;
  for (const auto& [e, c] : terms_) r.add_term({-e[0] - e[2], -e[1], e[2]}, c);
  return r;
}

namespace {

mpq_class qpow(const mpq_class& x, int k) {
  mpq_class base = k < 0 ? 1 / x : x;
  mpq_class r = 1;
  for (int i = 0; i < std::abs(k); ++i) r *= base;
  return r;
}

std::array<int, 3> print_key(const QTPoly::Exps& e) { return {e[1], e[0], e[2]}; }

}  // namespace

std::vector<mpq_class> QTPoly::at(const mpq_class& q, const std::optional<mpq_class>& c) const {
  std::vector<mpq_class> out;
  for (const auto& [e, coeff] : terms_) {
    if (e[1] < 0) throw InputError("expression has a negative power of T");
    if (e[2] != 0 && !c) throw InputError("expression involves c but no value for c was given");
    if (out.size() <= static_cast<std::size_t>(e[1])) out.resize(e[1] + 1);
    mpq_class v = coeff * qpow(q, e[0]);
    if (e[2]) v *= qpow(*c, e[2]);
    out[e[1]] += v;
  }
  return out;
}

std::string QTPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exps, mpz_class>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return print_key(a.first) < print_key(b.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    const mpz_class mag = abs(c);
    std::string factors;
    static const char* names[3] = {"q", "T", "c"};
    for (int i : {2, 0, 1}) {
      if (!e[i]) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty())
      out << mag.get_str();
    else if (mag == 1)
      out << factors;
    else
      out << mag.get_str() << "*" << factors;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// QTRational

QTRational::QTRational(QTPoly num, QTPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void QTRational::normalize() {
  if (den_.is_zero()) throw InputError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QTPoly(1);
    return;
  }
  auto m = den_.min_exponents();
  for (auto& x : m) x = -x;
  num_ = num_.shifted(m);
  den_ = den_.shifted(m);
  mpz_class g;
  const mpz_class cn = num_.content(), cd = den_.content();
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (g != 1) {
    num_ = num_.divided_by(g);
    den_ = den_.divided_by(g);
  }
  const auto lowest = std::min_element(den_.terms().begin(), den_.terms().end(), [](const auto& a, const auto& b) {
    return print_key(a.first) < print_key(b.first);
  });
  if (lowest->second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QTRational& QTRational::operator+=(const QTRational& o) {
  if (den_ == o.den_)
    num_ += o.num_;
  else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

QTRational& QTRational::operator-=(const QTRational& o) { return *this += -o; }

QTRational& QTRational::operator*=(const QTRational& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QTRational& QTRational::operator/=(const QTRational& o) {
  if (o.num_.is_zero()) throw InputError("division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

QTRational QTRational::pow(int k) const {
  QTRational base = *this;
  if (k < 0) {
    base = QTRational(1) / base;
    k = -k;
  }
  QTRational r(1);
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

std::string QTRational::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

QTRational one_minus(int a, int b, long coeff) {
  return QTRational(QTPoly(1) - QTPoly::monomial(a, b, 0, coeff));
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  QTRational run() {
    QTRational r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("formula parse error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }
  int exponent() {
    const bool paren = accept('(');
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    const mpz_class v = integer();
    if (!v.fits_sint_p()) fail("exponent too large");
    if (paren) expect(')');
    return sign * static_cast<int>(v.get_si());
  }

  QTRational expr() {
    QTRational r = term();
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }
  QTRational term() {
    QTRational r = unary();
    for (;;) {
      if (accept('*'))
        r *= unary();
      else if (accept('/'))
        r /= unary();
      else
        return r;
    }
  }
  QTRational unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  QTRational power() {
    QTRational a = atom();
    if (accept('^')) return a.pow(exponent());
    return a;
  }
  QTRational atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      QTRational r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return QTRational(QTPoly::constant(integer()));
    ++pos_;
    if (ch == 'q') return QTRational(QTPoly::monomial(1, 0));
    if (ch == 'T') return QTRational(QTPoly::monomial(0, 1));
    if (ch == 'c') return QTRational(QTPoly::monomial(0, 0, 1));
    --pos_;
    fail(std::string("unexpected '") + ch + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

QTRational QTRational::parse(const std::string& text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Series

namespace {

std::vector<mpq_class> series_divide(const std::vector<mpq_class>& num, const std::vector<mpq_class>& den,
                                     std::size_t order) {
  if (den.empty() || den[0] == 0) throw InputError("not expandable at T=0");
  std::vector<mpq_class> s(order);
  for (std::size_t k = 0; k < order; ++k) {
    mpq_class v = k < num.size() ? num[k] : mpq_class(0);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) v -= den[j] * s[k - j];
    s[k] = v / den[0];
  }
  return s;
}

std::vector<mpq_class> truncated_product(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                         std::size_t order) {
  std::vector<mpq_class> r(order);
  for (std::size_t i = 0; i < a.size() && i < order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

SeriesQ expand(const QTRational& w, const mpq_class& q_value, std::size_t order,
               const std::optional<mpq_class>& c_value) {
  if (q_value == 0) throw InputError("expand: q must be nonzero");
  return {q_value, series_divide(w.num().at(q_value, c_value), w.den().at(q_value, c_value), order)};
}

SeriesQ hadamard(const SeriesQ& a, const SeriesQ& b) {
  if (a.q_value != b.q_value || a.order() != b.order())
    throw InputError("hadamard: series differ in q or order");
  SeriesQ r{a.q_value, a.coeffs};
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] *= b.coeffs[i];
  return r;
}

SeriesQ scale_variable(const SeriesQ& s, const mpq_class& factor) {
  SeriesQ r = s;
  mpq_class f = 1;
  for (auto& c : r.coeffs) {
    c *= f;
    f *= factor;
  }
  return r;
}

FitResult fit_rational(const SeriesQ& s, const FitHypothesis& h) {
  if (h.numerator_degree < 0 || h.margin < 3) throw InputError("fit_rational: bad hypothesis");
  std::size_t degree = 0;
  std::vector<mpq_class> den{qpow(s.q_value, h.q_power)};
  for (auto [a, b] : h.factors) {
    if (b < 1) throw InputError("fit_rational: factor needs a positive power of T");
    std::vector<mpq_class> f(b + 1);
    f[0] = 1;
    f[b] = -qpow(s.q_value, a);
    den = truncated_product(den, f, den.size() + b);
    degree += b;
  }
  const std::size_t need = degree + h.numerator_degree + h.margin;
  if (s.order() <= need)
    throw InputError("fit_rational: series order " + std::to_string(s.order()) + " too short; need more than " +
                     std::to_string(need));
  const auto u = truncated_product(s.coeffs, den, s.order());
  FitResult r;
  r.numerator.assign(u.begin(), u.begin() + h.numerator_degree + 1);
  for (std::size_t k = h.numerator_degree + 1; k < u.size(); ++k)
    if (u[k] != 0) {
      r.failed_at = k;
      return r;
    }
  while (!r.numerator.empty() && r.numerator.back() == 0) r.numerator.pop_back();
  r.ok = true;
  return r;
}

std::optional<PadeResult> pade(const SeriesQ& s, int l, int m) {
  if (l < 0 || m < 0) throw InputError("pade: negative degree");
  if (s.order() < static_cast<std::size_t>(l + m + 1)) throw InputError("pade: series too short");
  auto coef = [&](int k) { return k < 0 ? mpq_class(0) : s.coeffs[k]; };
  std::vector<mpq_class> den{1};
  if (m > 0) {
    std::vector<RatVector> a;
    RatVector b;
    for (int k = l + 1; k <= l + m; ++k) {
      RatVector row;
      for (int j = 1; j <= m; ++j) row.push_back(coef(k - j));
      a.push_back(std::move(row));
      b.push_back(-coef(k));
    }
    const auto sol = solve_rational(a, b);
    if (!sol) return std::nullopt;
    den.insert(den.end(), sol->begin(), sol->end());
  }
  const auto prod = truncated_product(s.coeffs, den, s.order());
  PadeResult r;
  r.numerator.assign(prod.begin(), prod.begin() + l + 1);
  for (std::size_t k = l + 1; k < prod.size(); ++k)
    if (prod[k] != 0) return std::nullopt;
  r.denominator = std::move(den);
  return r;
}

bool functional_equation_check(const QTRational& w, int d) {
  return w.inverted() == w * QTRational(QTPoly::monomial(d, 1, 0, -1));
}

}  // namespace askzeta
