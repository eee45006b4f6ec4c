#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "askzeta/ring.hpp"

namespace askzeta {

using IntVector = std::vector<mpz_class>;
using RatVector = std::vector<mpq_class>;

/// Row-style Hermite normal form of the Z-span of `rows` (all of length
/// `width`). Zero rows are dropped; pivots are positive and strictly
/// increasing, entries above a pivot are reduced into [0, pivot).
struct HermiteForm {
  std::vector<IntVector> rows;
  std::vector<std::size_t> pivots;
};

HermiteForm hermite_normal_form(std::vector<IntVector> rows, std::size_t width);

/// Coordinates of `v` in a Hermite basis, or nullopt if v is outside its
/// rational span.
std::optional<RatVector> hermite_coordinates(const HermiteForm& h, const IntVector& v);

std::size_t rank_q(const IntMatrix& a);
mpz_class determinant(const IntMatrix& a);

/// Some solution of A x = b over Q, or nullopt. A is given by rows.
std::optional<RatVector> solve_rational(const std::vector<RatVector>& a, const RatVector& b);

/// Prime divisors of |n| by trial division.
std::vector<std::int64_t> prime_divisors(mpz_class n);

}  // namespace askzeta
