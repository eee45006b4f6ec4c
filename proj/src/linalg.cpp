#include "askzeta/linalg.hpp"

#include <algorithm>
#include <utility>

#include "askzeta/error.hpp"

namespace askzeta {

HermiteForm hermite_normal_form(std::vector<IntVector> rows, std::size_t width) {
  for (const auto& r : rows)
    if (r.size() != width) throw InputError("hermite_normal_form: row length mismatch");
  HermiteForm out;
  std::size_t top = 0;
  for (std::size_t c = 0; c < width && top < rows.size(); ++c) {
    // Euclid down the column until a single nonzero entry remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
        for (std::size_t k = c; k < width; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = c; k < width; ++k) rows[r][k] -= q * rows[top][k];
    }
    out.pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  out.rows = std::move(rows);
  return out;
}

std::optional<RatVector> hermite_coordinates(const HermiteForm& h, const IntVector& v) {
  std::vector<mpq_class> rest(v.begin(), v.end());
  RatVector coords(h.rows.size());
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    const std::size_t c = h.pivots[i];
    if (rest[c] == 0) continue;
    coords[i] = rest[c] / mpq_class(h.rows[i][c]);
    for (std::size_t k = c; k < rest.size(); ++k) rest[k] -= coords[i] * h.rows[i][k];
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

namespace {

// Fraction-free elimination; returns rank and, for square input, the
// determinant.
std::pair<std::size_t, mpz_class> bareiss(const IntMatrix& a) {
  const std::size_t n = a.rows(), m = a.cols();
  std::vector<std::vector<mpz_class>> w(n, std::vector<mpz_class>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) w[i][j] = a(i, j);
  mpz_class prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && w[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != rank) {
      std::swap(w[piv], w[rank]);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < m; ++j) {
        w[i][j] = w[rank][c] * w[i][j] - w[i][c] * w[rank][j];
        mpz_divexact(w[i][j].get_mpz_t(), w[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      w[i][c] = 0;
    }
    prev = w[rank][c];
    ++rank;
  }
  mpz_class det = 0;
  if (n == m) det = rank == n ? (n ? prev * sign : mpz_class(1)) : mpz_class(0);
  return {rank, det};
}

}  // namespace

std::size_t rank_q(const IntMatrix& a) { return bareiss(a).first; }

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant: matrix not square");
  return bareiss(a).second;
}

std::optional<RatVector> solve_rational(const std::vector<RatVector>& a, const RatVector& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InputError("solve_rational: shape mismatch");
  const std::size_t m = n ? a[0].size() : 0;
  std::vector<RatVector> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != m) throw InputError("solve_rational: ragged matrix");
    w[i] = a[i];
    w[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && w[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(w[piv], w[r]);
    const mpq_class inv = 1 / w[r][c];
    for (std::size_t k = c; k <= m; ++k) w[r][k] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || w[i][c] == 0) continue;
      const mpq_class f = w[i][c];
      for (std::size_t k = c; k <= m; ++k) w[i][k] -= f * w[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (w[i][m] != 0) return std::nullopt;
  RatVector x(m);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = w[i][m];
  return x;
}

std::vector<std::int64_t> prime_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; n > 1; ++p) {
    if (mpz_class(static_cast<long>(p)) * p > n) {
      if (!n.fits_slong_p()) throw InputError("prime_divisors: cofactor too large");
      out.push_back(n.get_si());
      break;
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      out.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) n /= p;
    }
  }
  return out;
}

}  // namespace askzeta
