#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "askzeta/linalg.hpp"
#include "askzeta/poly.hpp"
#include "askzeta/ring.hpp"

namespace askzeta {

/// A Z-submodule of Mat_{d x e}(Z) given by a spanning set. The canonical
/// basis is the Hermite normal form of the flattened spanning set, so two
/// modules compare equal iff they are equal as Z-modules.
class MatrixModule {
 public:
  MatrixModule() = default;
  MatrixModule(std::size_t d, std::size_t e, std::vector<IntMatrix> spanning, std::string label = {});

  std::size_t d() const { return d_; }
  std::size_t e() const { return e_; }
  /// Rank of the module (length of the canonical basis).
  std::size_t dim() const { return basis_.size(); }
  const std::vector<IntMatrix>& basis() const { return basis_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Basis as rows of the dim x (d*e) coefficient matrix.
  IntMatrix coefficient_matrix() const;

  bool contains(const IntMatrix& a) const;
  /// Coordinates in the canonical basis; nullopt outside the rational span.
  std::optional<RatVector> coordinates(const IntMatrix& a) const;
  /// Element sum_i c_i a_i of the canonical basis.
  IntMatrix element(std::span<const mpz_class> coeffs) const;

  friend bool operator==(const MatrixModule& a, const MatrixModule& b) {
    return a.d_ == b.d_ && a.e_ == b.e_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t d_ = 0;
  std::size_t e_ = 0;
  std::vector<IntMatrix> basis_;
  HermiteForm hermite_;
  std::string label_;
};

/// Matrix whose entries are integral linear forms in `nvars` variables.
/// coeff(i, j)[k] is the coefficient of X_{k+1} in entry (i, j).
class LinearFormMatrix {
 public:
  LinearFormMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, IntVector(nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  IntVector& coeff(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const IntVector& coeff(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix evaluate(std::span<const mpz_class> point) const;
  PolyMatrix to_poly() const;
  std::string to_string() const;

 private:
  std::size_t rows_, cols_, nvars_;
  std::vector<IntVector> data_;
};

/// C(X): the dim x e matrix with rows X a_i, in d variables.
LinearFormMatrix orbit_matrix(const MatrixModule& m);
/// X_1 a_1 + ... + X_dim a_dim: a d x e matrix in dim variables.
LinearFormMatrix generic_element(const MatrixModule& m);

struct RankOptions {
  std::uint64_t seed = 1;
  int samples = 50;
  /// Run the symbolic elimination when min(rows, cols) is at most this.
  std::size_t symbolic_limit = 6;
};

/// Rank over Q(X); randomized evaluation cross-checked against
/// fraction-free symbolic elimination when affordable.
std::size_t generic_rank(const LinearFormMatrix& c, const RankOptions& opts = {});

std::size_t generic_element_rank(const MatrixModule& m, const RankOptions& opts = {});
std::size_t generic_orbit_rank(const MatrixModule& m, const RankOptions& opts = {});

MatrixModule transform_transpose(const MatrixModule& m);
MatrixModule transform_direct_sum(const MatrixModule& a, const MatrixModule& b);
MatrixModule transform_add_zero_row(const MatrixModule& m, std::size_t position);
MatrixModule transform_add_zero_col(const MatrixModule& m, std::size_t position);
MatrixModule transform_rescale(const MatrixModule& m, int power, std::int64_t p);

/// Primes p for which the module is not isolated in Mat_{d x e}(Z_p), i.e.
/// the primes dividing a nonunit elementary divisor of the coefficient
/// matrix.
std::vector<std::int64_t> non_isolated_primes(const MatrixModule& m);
bool is_isolated_at(const MatrixModule& m, std::int64_t p);

}  // namespace askzeta
