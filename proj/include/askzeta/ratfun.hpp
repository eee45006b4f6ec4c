#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace askzeta {

/// Laurent polynomial in q, T and an auxiliary symbol c with integer
/// coefficients. Exponent vectors are (q, T, c).
class QTPoly {
 public:
  using Exps = std::array<int, 3>;
  using Terms = std::map<Exps, mpz_class>;

  QTPoly() = default;
  QTPoly(long c);  // NOLINT: integer literals are polynomials
  static QTPoly constant(const mpz_class& c);
  static QTPoly monomial(int q, int t, int c = 0, const mpz_class& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_c() const;
  /// Componentwise minimum of the exponents; zero for the zero polynomial.
  Exps min_exponents() const;
  mpz_class content() const;

  QTPoly& operator+=(const QTPoly& o);
  QTPoly& operator-=(const QTPoly& o);
  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator-(const QTPoly& a);
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
  friend bool operator==(const QTPoly&, const QTPoly&) = default;

  QTPoly shifted(const Exps& by) const;
  QTPoly divided_by(const mpz_class& c) const;
  /// q -> 1/q, T -> 1/T, c -> c/q.
  QTPoly inverted() const;
  /// Polynomial in T (index = exponent) after substituting numbers for q
  /// and c; throws if T occurs with a negative exponent.
  std::vector<mpq_class> at(const mpq_class& q, const std::optional<mpq_class>& c = std::nullopt) const;

  std::string to_string() const;

 private:
  void add_term(const Exps& e, const mpz_class& c);
  Terms terms_;
};

/// Rational function num/den in q, T (and c). Kept normalized: the
/// denominator has no monomial factor and the common integer content is
/// removed. No polynomial gcd is taken; equality is tested by
/// cross-multiplication.
class QTRational {
 public:
  QTRational() : num_(0), den_(1) {}
  QTRational(long c) : num_(c), den_(1) {}  // NOLINT
  QTRational(QTPoly num, QTPoly den = QTPoly(1));

  static QTRational parse(const std::string& text);

  const QTPoly& num() const { return num_; }
  const QTPoly& den() const { return den_; }
  bool has_c() const { return num_.has_c() || den_.has_c(); }

  QTRational& operator+=(const QTRational& o);
  QTRational& operator-=(const QTRational& o);
  QTRational& operator*=(const QTRational& o);
  QTRational& operator/=(const QTRational& o);
  friend QTRational operator+(QTRational a, const QTRational& b) { return a += b; }
  friend QTRational operator-(QTRational a, const QTRational& b) { return a -= b; }
  friend QTRational operator*(QTRational a, const QTRational& b) { return a *= b; }
  friend QTRational operator/(QTRational a, const QTRational& b) { return a /= b; }
  friend QTRational operator-(const QTRational& a) { return QTRational(-a.num_, a.den_); }
  QTRational pow(int k) const;

  /// Identity of rational functions.
  friend bool operator==(const QTRational& a, const QTRational& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  QTRational inverted() const { return QTRational(num_.inverted(), den_.inverted()); }

  /// "(numerator)/(denominator)"; parse(to_string()) reproduces the value
  /// and the same text.
  std::string to_string() const;

 private:
  void normalize();
  QTPoly num_, den_;
};

/// 1 - coeff q^a T^b.
QTRational one_minus(int a, int b, long coeff = 1);

/// Truncated power series in T at a fixed rational value of q.
struct SeriesQ {
  mpq_class q_value;
  std::vector<mpq_class> coeffs;

  std::size_t order() const { return coeffs.size(); }
  friend bool operator==(const SeriesQ&, const SeriesQ&) = default;
};

SeriesQ expand(const QTRational& w, const mpq_class& q_value, std::size_t order,
               const std::optional<mpq_class>& c_value = std::nullopt);
SeriesQ hadamard(const SeriesQ& a, const SeriesQ& b);
/// Coefficient n of the series multiplied by factor^n.
SeriesQ scale_variable(const SeriesQ& s, const mpq_class& factor);

struct FitHypothesis {
  /// Factors (1 - q^a T^b) of the denominator.
  std::vector<std::pair<int, int>> factors;
  /// Global prefactor q^m on the denominator.
  int q_power = 0;
  int numerator_degree = 0;
  int margin = 3;
};

struct FitResult {
  bool ok = false;
  /// Numerator coefficients in T at the fixed q.
  std::vector<mpq_class> numerator;
  /// Index of the first coefficient contradicting the hypothesis.
  std::size_t failed_at = 0;
};

/// Recover the numerator of S under a denominator hypothesis; the
/// coefficients beyond the numerator degree must all vanish.
FitResult fit_rational(const SeriesQ& s, const FitHypothesis& h);

/// [L/M] Pade approximant with Q(0) = 1 if one exists and reproduces all
/// supplied coefficients.
struct PadeResult {
  std::vector<mpq_class> numerator, denominator;
};
std::optional<PadeResult> pade(const SeriesQ& s, int l, int m);

/// W(1/q, 1/T) == (-q^d T) W(q, T), with c -> c/q.
bool functional_equation_check(const QTRational& w, int d);

}  // namespace askzeta
