#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "askzeta/poly.hpp"
#include "askzeta/ratfun.hpp"

namespace askzeta {

enum class ZetaKind { ask, cc, oc };
std::string to_string(ZetaKind k);

struct CatalogEntry {
  std::string key;
  QTRational formula;
  /// Module the formula belongs to: a catalog_module key, an "L_{d,i}"
  /// structure-constant key for cc entries, or "none (cc-zeta)".
  std::string module_ref;
  std::string validity;
  ZetaKind kind = ZetaKind::ask;
  /// Dimension for the functional equation (the number of rows).
  int feqn_d = 0;
  /// Primes at which the formula has been checked against enumeration,
  /// for entries whose validity threshold is unknown.
  std::vector<std::int64_t> tested_at;
  /// Formula involves c = #E(F_q) for E: Y^2 = X^3 - X.
  bool uses_elliptic_count = false;
  /// Formula text as originally printed, when the stored formula differs
  /// from it, and why.
  std::string printed_formula;
  std::string note;
};

CatalogEntry closed_form(const std::string& key);
/// Keys of the exported listing (families instantiated at small sizes).
std::vector<std::string> closed_form_keys();

/// Whether the entry's validity condition holds at p (false for "p
/// sufficiently large" entries outside their tested list).
bool validity_holds(const CatalogEntry& e, std::int64_t p);

/// B_n(X, Y) as a polynomial in two variables (X, Y).
Poly brenti_polynomial(int n);
bool brenti_identity_check(int n, int order);
/// Same check against a caller-supplied candidate for B_n.
bool brenti_identity_check(int n, int order, const Poly& candidate);

QTRational constant_rank_form(int d, int l, int r);
QTRational mat_form(int d, int e);

/// Number of points of Y^2 = X^3 - X in P^2(F_p), including infinity.
std::int64_t elliptic_point_count(std::int64_t p);

}  // namespace askzeta
