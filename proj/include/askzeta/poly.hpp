#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace askzeta {

/// Sparse multivariate polynomial over Z in a fixed number of variables.
/// Monomials are ordered lexicographically by exponent vector.
class Poly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, mpz_class>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const mpz_class& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(const Exponents& exps, const mpz_class& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int degree) const;
  mpz_class coefficient(const Exponents& exps) const;

  mpz_class evaluate(std::span<const mpz_class> point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// a / b where b is known to divide a; throws InternalError otherwise.
  static Poly exact_divide(const Poly& a, const Poly& b);

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const Exponents& e, const mpz_class& c);

  std::size_t nvars_ = 0;
  Terms terms_;
};

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Rank over the fraction field (fraction-free elimination).
std::size_t poly_rank(PolyMatrix m);
Poly poly_determinant(PolyMatrix m);

}  // namespace askzeta
