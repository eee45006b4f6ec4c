#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "askzeta/linalg.hpp"
#include "askzeta/matmodule.hpp"
#include "askzeta/ratfun.hpp"

namespace askzeta {

enum class Tri { certified, refuted, inconclusive };
std::string to_string(Tri t);

struct StructuralOptions {
  std::uint64_t seed = 1;
  int witness_trials = 10000;
  std::uint64_t minor_cap = 1000000;
};

/// Outcome of one of the monomial criteria.
struct PredicateResult {
  Tri status = Tri::inconclusive;
  std::string reason;
  /// Number of nonzero i x i minors and the dimension of their span, per
  /// degree i = 1, 2, ... (certificate data).
  std::vector<std::size_t> minor_counts, span_dims;
  /// Primes at which the certificate does not apply.
  std::vector<std::int64_t> excluded_primes;
  /// Refutation: a point (x for orbits, coefficients for elements) where
  /// the rank drops, and that rank.
  std::optional<IntVector> witness;
  std::size_t witness_rank = 0;

  bool valid_at(std::int64_t p) const;
};

PredicateResult check_o_maximal(const MatrixModule& m, const StructuralOptions& opts = {});
PredicateResult check_k_minimal(const MatrixModule& m, const StructuralOptions& opts = {});

struct ConstantRankResult {
  bool constant = true;
  int rank = 0;
  /// M (x) F_q has no nonzero element with a nonzero matrix.
  bool no_nonzero_elements = false;
  std::vector<int> ranks_seen;
};

ConstantRankResult check_constant_rank_fq(const MatrixModule& m, std::int64_t q,
                                          std::uint64_t budget = 10000000);

struct StructureReport {
  std::size_t grk = 0, gor = 0;
  PredicateResult o_maximal, k_minimal;
  /// Constant rank is equivalent to K-minimality and constant orbit
  /// dimension to O-maximality; these mirror the two checks.
  Tri constant_rank = Tri::inconclusive, constant_orbit_dim = Tri::inconclusive;
  std::optional<std::string> template_key;
  std::optional<QTRational> template_formula;
};

StructureReport structure_report(const MatrixModule& m, const StructuralOptions& opts = {});

}  // namespace askzeta
