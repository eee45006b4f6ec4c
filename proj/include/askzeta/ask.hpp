#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "askzeta/matmodule.hpp"
#include "askzeta/ring.hpp"

namespace askzeta {

enum class AskMethod { automatic, average, orbit, both };

std::string to_string(AskMethod m);
AskMethod parse_ask_method(const std::string& s);

struct AskOptions {
  /// Maximal number of enumerated points per coefficient.
  std::uint64_t budget = 100000000;
  unsigned jobs = 1;
};

struct AskValue {
  mpq_class value;
  std::int64_t p = 0;
  int n = 0;
  /// The method that produced `value`; `both` when the engines were compared.
  AskMethod method = AskMethod::average;
};

struct CoeffSeq {
  std::int64_t p = 0;
  std::vector<AskValue> values;

  std::vector<mpq_class> coefficients() const;
};

/// Average of |Ker(sum c_i a_i)| over all c in (Z/p^n)^dim.
mpq_class ask_average(const MatrixModule& m, const RingSpec& ring, const AskOptions& opts = {});
/// Sum over x in (Z/p^n)^d of 1/|x M_n|.
mpq_class ask_orbit(const MatrixModule& m, const RingSpec& ring, const AskOptions& opts = {});

/// Number of points either method would enumerate.
mpz_class average_cost(const MatrixModule& m, const RingSpec& ring);
mpz_class orbit_cost(const MatrixModule& m, const RingSpec& ring);

AskValue ask_value(const MatrixModule& m, const RingSpec& ring, AskMethod method,
                   const AskOptions& opts = {});
CoeffSeq ask_series(const MatrixModule& m, std::int64_t p, int n_max,
                    AskMethod method = AskMethod::automatic, const AskOptions& opts = {});

/// ask over Z/N for arbitrary N >= 1.
mpq_class ask_mod_composite(const MatrixModule& m, std::int64_t modulus, const AskOptions& opts = {});

/// Number of d x e matrices of rank r over F_q.
mpz_class rank_distribution(int d, int e, int r, std::int64_t q);

}  // namespace askzeta
