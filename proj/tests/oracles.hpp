// Brute-force reference computations used by the tests. Nothing here goes
// through the library's Smith reduction or closed forms.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "askzeta/matmodule.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t ipow(std::int64_t b, int k) {
  std::int64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

inline std::int64_t mod(const mpz_class& x, std::int64_t m) {
  mpz_class r = x % m;
  if (r < 0) r += m;
  return r.get_si();
}

// Calls f on every vector of length len over Z/m.
template <class F>
void each_vector(std::size_t len, std::int64_t m, F&& f) {
  Vec v(len, 0);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < len && ++v[i] == m) v[i++] = 0;
    if (i == len) return;
  }
}

// a as residues mod m, row-major d x e
inline Vec residues(const askzeta::IntMatrix& a, std::int64_t m) {
  Vec r;
  for (const auto& x : a.entries()) r.push_back(mod(x, m));
  return r;
}

// x * A over Z/m
inline Vec row_times(const Vec& x, const Vec& a, std::size_t d, std::size_t e, std::int64_t m) {
  Vec y(e, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < e; ++j) y[j] = (y[j] + x[i] * a[i * e + j]) % m;
  return y;
}

// |{x in (Z/m)^d : xA = 0}|
inline std::int64_t kernel_count(const askzeta::IntMatrix& a, std::int64_t m) {
  const auto r = residues(a, m);
  std::int64_t count = 0;
  each_vector(a.rows(), m, [&](const Vec& x) {
    for (auto y : row_times(x, r, a.rows(), a.cols(), m))
      if (y) return;
    ++count;
  });
  return count;
}

// |{xA : x in (Z/m)^d}|
inline std::int64_t image_count(const askzeta::IntMatrix& a, std::int64_t m) {
  const auto r = residues(a, m);
  std::set<Vec> img;
  each_vector(a.rows(), m, [&](const Vec& x) { img.insert(row_times(x, r, a.rows(), a.cols(), m)); });
  return static_cast<std::int64_t>(img.size());
}

// Average kernel size over all elements of M (x) Z/m, listing the elements
// as a set so a redundant spanning set does no harm.
inline mpq_class ask_by_elements(const askzeta::MatrixModule& mod_, std::int64_t m) {
  const std::size_t d = mod_.d(), e = mod_.e();
  std::vector<Vec> basis;
  for (const auto& b : mod_.basis()) basis.push_back(residues(b, m));
  std::set<Vec> elements;
  each_vector(basis.size(), m, [&](const Vec& c) {
    Vec a(d * e, 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t t = 0; t < d * e; ++t) a[t] = (a[t] + c[k] * basis[k][t]) % m;
    elements.insert(a);
  });
  mpz_class total = 0;
  for (const auto& a : elements) {
    askzeta::IntMatrix x(d, e);
    for (std::size_t t = 0; t < d * e; ++t) x.entries()[t] = a[t];
    total += kernel_count(x, m);
  }
  mpq_class r(total, static_cast<long>(elements.size()));
  r.canonicalize();
  return r;
}

// Orbit formula: sum over x of 1/|x M|, with x M computed as a set.
inline mpq_class ask_by_orbits(const askzeta::MatrixModule& mod_, std::int64_t m) {
  const std::size_t d = mod_.d(), e = mod_.e();
  std::vector<Vec> basis;
  for (const auto& b : mod_.basis()) basis.push_back(residues(b, m));
  mpq_class total = 0;
  each_vector(d, m, [&](const Vec& x) {
    std::vector<Vec> gens;
    for (const auto& b : basis) gens.push_back(row_times(x, b, d, e, m));
    std::set<Vec> span;
    each_vector(gens.size(), m, [&](const Vec& c) {
      Vec y(e, 0);
      for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t j = 0; j < e; ++j) y[j] = (y[j] + c[k] * gens[k][j]) % m;
      span.insert(y);
    });
    total += mpq_class(1, static_cast<long>(span.size()));
  });
  total.canonicalize();
  return total;
}

// ask of the full matrix module over Z/p^n: x has orbit (p^v)^e where v is
// the minimal valuation of its entries.
inline mpq_class ask_full_matrix(int d, int e, std::int64_t p, int n) {
  mpq_class total = 1;  // x = 0
  for (int v = 0; v < n; ++v) {
    const mpz_class count = ipow(p, (n - v) * d) - ipow(p, (n - v - 1) * d);
    total += mpq_class(count, mpz_class(ipow(p, (n - v) * e)));
  }
  total.canonicalize();
  return total;
}

inline askzeta::MatrixModule random_module(std::mt19937_64& rng, std::size_t d, std::size_t e, std::size_t l,
                                           int bound = 5) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<askzeta::IntMatrix> span;
  for (std::size_t k = 0; k < l; ++k) {
    askzeta::IntMatrix a(d, e);
    for (auto& x : a.entries()) x = dist(rng);
    span.push_back(a);
  }
  return askzeta::MatrixModule(d, e, span);
}

// Power series of prod 1/(1 - a_i T) * num(T), first k coefficients.
inline std::vector<mpq_class> series_of(std::vector<mpq_class> num, const std::vector<mpq_class>& poles, std::size_t k) {
  num.resize(k, 0);
  for (const auto& a : poles)
    for (std::size_t i = 1; i < k; ++i) num[i] += a * num[i - 1];
  return num;
}

}  // namespace oracle
