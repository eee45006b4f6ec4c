#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace askzeta {

bool is_prime(std::int64_t n);

/// The finite ring Z/p^n. Level 0 is the zero ring.
class RingSpec {
 public:
  RingSpec(std::int64_t p, int n);

  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  mpz_class order() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::int64_t p_;
  int n_;
};

/// p-adic valuation; zero has infinite valuation.
class Valuation {
 public:
  explicit Valuation(int v) : value_(v), infinite_(false) {}
  static Valuation infinite() { return Valuation(); }

  bool is_infinite() const { return infinite_; }
  int value() const;
  /// min(v, n); infinity caps to n.
  int capped(int n) const { return infinite_ || value_ > n ? n : value_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation() : value_(0), infinite_(true) {}
  int value_;
  bool infinite_;
};

Valuation pval(const mpz_class& x, std::int64_t p);

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const mpz_class> entries() const { return data_; }
  std::span<mpz_class> entries() { return data_; }

  IntMatrix transposed() const;
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const mpz_class& s, const IntMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Elementary divisor valuations (lambda_1 <= ... <= lambda_r) of an integer
/// matrix localized at p; r is the rank over Q.
struct EquivType {
  std::vector<int> lambdas;

  std::size_t rank() const { return lambdas.size(); }
  friend bool operator==(const EquivType&, const EquivType&) = default;
};

EquivType equivalence_type(const IntMatrix& a, std::int64_t p);

/// A cardinality p^exponent, kept symbolic until asked for.
struct PowerOfP {
  std::int64_t p;
  std::int64_t exponent;

  mpz_class value() const;
  friend bool operator==(const PowerOfP&, const PowerOfP&) = default;
};

std::int64_t kernel_exponent(const EquivType& type, std::size_t d, int n);
std::int64_t image_exponent(const EquivType& type, int n);

/// |Ker(x -> x a)| on (Z/p^n)^d for a d x e.
PowerOfP kernel_size(const IntMatrix& a, const RingSpec& ring);
/// |Img(x -> x a)| in (Z/p^n)^e.
PowerOfP image_size(const IntMatrix& a, const RingSpec& ring);
/// Size of the image in (Z/p^n)^e of the span of the given rows.
PowerOfP span_size(std::span<const std::vector<mpz_class>> rows, std::size_t e,
                   const RingSpec& ring);

// ---------------------------------------------------------------------------
// Word-sized arithmetic mod p^n for the enumeration engines.

/// Z/p^n with p^n < 2^31 so products of residues fit in 64 bits.
class LocalRing {
 public:
  LocalRing(std::int64_t p, int n);

  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  std::int64_t modulus() const { return m_; }
  std::int64_t power(int k) const { return pow_[k]; }

  /// Valuation of a nonzero residue in [0, m).
  int val(std::int64_t x) const {
    int v = 0;
    while (x % p_ == 0) {
      x /= p_;
      ++v;
    }
    return v;
  }
  std::int64_t reduce(const mpz_class& x) const;
  std::int64_t inverse(std::int64_t unit) const;

 private:
  std::int64_t p_;
  int n_;
  std::int64_t m_;
  std::vector<std::int64_t> pow_;
};

/// Smith data of a residue matrix: number of nonzero invariant factors and
/// the sum of their valuations.
struct SmithProfile {
  int rank = 0;
  int valuation_sum = 0;
};

/// Local Smith reduction mod p^n. Destroys `work` (row-major rows x cols,
/// entries in [0, m)).
SmithProfile smith_profile(std::span<std::int64_t> work, std::size_t rows, std::size_t cols,
                           const LocalRing& ring);

/// |Ker(x -> x a)| over Z/N for a residue matrix with entries in [0, N).
/// Destroys `work`.
mpz_class kernel_size_mod(std::span<std::int64_t> work, std::size_t rows, std::size_t cols,
                          std::int64_t modulus);

std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace askzeta
