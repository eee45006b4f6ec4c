#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "askzeta/linalg.hpp"
#include "askzeta/matmodule.hpp"

namespace askzeta {

/// A Lie ring Z^dim given by integral structure constants:
/// [x_i, x_j] = sum_k bracket(i, j)[k] x_k.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim, std::string label = {});

  /// Build from relations (i, j, k, c) meaning [x_i, x_j] += c x_k
  /// (0-indexed); antisymmetry is filled in.
  static LieAlgebra from_relations(std::size_t dim,
                                   const std::vector<std::tuple<int, int, int, long>>& rels,
                                   std::string label = {});
  /// Structure constants of a module of square matrices closed under the
  /// commutator, in its canonical basis.
  static LieAlgebra from_module(const MatrixModule& m);

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const IntVector& bracket(std::size_t i, std::size_t j) const { return brackets_[i * dim_ + j]; }

  bool satisfies_jacobi() const;
  bool is_abelian() const;
  /// Length of the lower central series; 0 for the zero algebra.
  int nilpotency_class() const;

  /// ad(x_i) as the dim x dim matrix of b -> [b, x_i] acting on row vectors.
  IntMatrix ad_matrix(std::size_t i) const;
  MatrixModule ad_module() const;

 private:
  std::size_t dim_;
  std::vector<IntVector> brackets_;
  std::string label_;
};

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b);

/// ad(L) for a module L of square matrices that is a Lie ring.
MatrixModule ad_representation(const MatrixModule& l);

/// Nilpotent Lie algebras of dimension <= 5 in de Graaf's numbering L_{d,i}.
LieAlgebra graaf_algebra(int d, int i);
std::vector<std::pair<int, int>> graaf_algebra_list();

}  // namespace askzeta
