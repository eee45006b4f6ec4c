#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "askzeta/ask.hpp"
#include "askzeta/lie.hpp"
#include "askzeta/matmodule.hpp"
#include "askzeta/ring.hpp"

namespace askzeta {

/// Generators of a subgroup of GL_d acting on row vectors from the right.
struct GroupGenSet {
  std::size_t d = 0;
  std::vector<IntMatrix> generators;
  std::string label;
};

/// sum_{i<d} a^i / i! mod p^n; needs a^d = 0 and p >= d.
IntMatrix exp_nilpotent(const IntMatrix& a, const RingSpec& ring);
/// sum_{i<d} (-1)^{i+1} (g - 1)^i / i mod p^n; needs (g - 1)^d = 0 mod p^n.
IntMatrix log_unipotent(const IntMatrix& g, const RingSpec& ring);

/// Checks that a module of square matrices is a nilpotent Lie algebra:
/// Lie-closed with integral structure constants and
/// (X_1 a_1 + ... + X_l a_l)^d = 0 identically. Throws InputError otherwise.
void check_nilpotent_algebra(const MatrixModule& l);

struct GroupOptions {
  std::uint64_t budget = 100000000;
};

/// |(Z/p^n)^d / G_n| for n = 0..n_max.
std::vector<mpz_class> oc_coefficients(const GroupGenSet& g, std::int64_t p, int n_max,
                                       const GroupOptions& opts = {});

/// k(G_n) for G_n generated by exp(a_i) mod p^n, n = 0..n_max.
std::vector<mpz_class> cc_coefficients_direct(const MatrixModule& l, std::int64_t p, int n_max,
                                              const GroupOptions& opts = {});

struct BridgeResult {
  CoeffSeq series;
  /// Hypotheses of the ask/group correspondence that fail at p.
  std::vector<std::string> warnings;
};

/// ask series of ad(L).
BridgeResult cc_via_ask(const MatrixModule& l, std::int64_t p, int n_max, AskMethod method = AskMethod::automatic,
                        const AskOptions& opts = {});
BridgeResult cc_via_ask(const LieAlgebra& l, std::int64_t p, int n_max, AskMethod method = AskMethod::automatic,
                        const AskOptions& opts = {});
/// ask series of L itself.
BridgeResult oc_via_ask(const MatrixModule& l, std::int64_t p, int n_max, AskMethod method = AskMethod::automatic,
                        const AskOptions& opts = {});

/// exp(a_i) for the basis of L, at level n (entries reduced mod p^n).
GroupGenSet exp_generators(const MatrixModule& l, const RingSpec& ring);

/// Block matrices [[I_d, a], [0, I_e]] in GL_{d+e}.
GroupGenSet semidirect_embed(const MatrixModule& m);

/// Transvections together with diagonal matrices generating the units.
GroupGenSet gl_generators(std::size_t d, std::int64_t p);

}  // namespace askzeta
