#include "askzeta/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "askzeta/error.hpp"

namespace askzeta {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  const auto un = static_cast<std::uint64_t>(n);
  std::uint64_t d = un - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

RingSpec::RingSpec(std::int64_t p, int n) : p_(p), n_(n) {
  if (!is_prime(p)) throw InputError("ring: " + std::to_string(p) + " is not prime");
  if (n < 0) throw InputError("ring: negative level " + std::to_string(n));
}

mpz_class RingSpec::order() const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(n_));
  return r;
}

int Valuation::value() const {
  if (infinite_) throw InputError("valuation of zero is infinite");
  return value_;
}

Valuation pval(const mpz_class& x, std::int64_t p) {
  if (x == 0) return Valuation::infinite();
  mpz_class t = x;
  int v = 0;
  const mpz_class pp(static_cast<long>(p));
  while (mpz_divisible_p(t.get_mpz_t(), pp.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t());
    ++v;
  }
  return Valuation(v);
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("IntMatrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

IntMatrix IntMatrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  IntMatrix r(rows, cols);
  r(i, j) = 1;
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("IntMatrix +: shape mismatch");
  IntMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("IntMatrix -: shape mismatch");
  IntMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("IntMatrix *: shape mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

IntMatrix operator*(const mpz_class& s, const IntMatrix& a) {
  IntMatrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

// ---------------------------------------------------------------------------

EquivType equivalence_type(const IntMatrix& a, std::int64_t p) {
  if (!is_prime(p)) throw InputError("equivalence_type: " + std::to_string(p) + " is not prime");
  const mpz_class pp(static_cast<long>(p));
  std::vector<std::vector<mpz_class>> w(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) w[i][j] = a(i, j);

  std::vector<std::size_t> rows(a.rows()), cols(a.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);

  EquivType out;
  while (!rows.empty() && !cols.empty()) {
    // Pivot on an entry of minimal valuation.
    int best = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t ri = 0; ri < rows.size() && best != 0; ++ri)
      for (std::size_t cj = 0; cj < cols.size(); ++cj) {
        const Valuation v = pval(w[rows[ri]][cols[cj]], p);
        if (v.is_infinite()) continue;
        if (best < 0 || v.value() < best) {
          best = v.value();
          bi = ri;
          bj = cj;
          if (best == 0) break;
        }
      }
    if (best < 0) break;
    const std::size_t pr = rows[bi], pc = cols[bj];
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(best));
    const mpz_class unit = w[pr][pc] / scale;

    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(bi));
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(bj));
    // Row i <- unit * row i - (b / p^v) * pivot row. Scaling by a p-unit
    // preserves the local equivalence class; the pivot row and column are
    // then dropped since column operations would only touch the pivot row.
    for (std::size_t r : rows) {
      const mpz_class b = w[r][pc];
      if (b == 0) continue;
      const mpz_class f = b / scale;
      mpz_class content = 0;
      for (std::size_t c : cols) {
        w[r][c] = unit * w[r][c] - f * w[pr][c];
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[r][c].get_mpz_t());
      }
      w[r][pc] = 0;
      // Strip the p-prime part of the row content to limit growth.
      if (content > 1) {
        while (mpz_divisible_p(content.get_mpz_t(), pp.get_mpz_t()))
          mpz_divexact(content.get_mpz_t(), content.get_mpz_t(), pp.get_mpz_t());
        if (content > 1)
          for (std::size_t c : cols) mpz_divexact(w[r][c].get_mpz_t(), w[r][c].get_mpz_t(), content.get_mpz_t());
      }
    }
    out.lambdas.push_back(best);
  }
  std::sort(out.lambdas.begin(), out.lambdas.end());
  return out;
}

mpz_class PowerOfP::value() const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(exponent));
  return r;
}

std::int64_t kernel_exponent(const EquivType& type, std::size_t d, int n) {
  std::int64_t e = static_cast<std::int64_t>(d - type.rank()) * n;
  for (int l : type.lambdas) e += std::min(l, n);
  return e;
}

std::int64_t image_exponent(const EquivType& type, int n) {
  std::int64_t e = 0;
  for (int l : type.lambdas) e += n - std::min(l, n);
  return e;
}

PowerOfP kernel_size(const IntMatrix& a, const RingSpec& ring) {
  return {ring.p(), kernel_exponent(equivalence_type(a, ring.p()), a.rows(), ring.n())};
}

PowerOfP image_size(const IntMatrix& a, const RingSpec& ring) {
  return {ring.p(), image_exponent(equivalence_type(a, ring.p()), ring.n())};
}

PowerOfP span_size(std::span<const std::vector<mpz_class>> rows, std::size_t e,
                   const RingSpec& ring) {
  IntMatrix stacked(rows.size(), e);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != e) throw InputError("span_size: vector length mismatch");
    for (std::size_t j = 0; j < e; ++j) stacked(i, j) = rows[i][j];
  }
  return image_size(stacked, ring);
}

// ---------------------------------------------------------------------------

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    const std::int64_t q = g / a1;
    std::int64_t t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw InputError("inverse_mod: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return ((x % m) + m) % m;
}

LocalRing::LocalRing(std::int64_t p, int n) : p_(p), n_(n), m_(1) {
  if (!is_prime(p)) throw InputError("LocalRing: " + std::to_string(p) + " is not prime");
  if (n < 0) throw InputError("LocalRing: negative level");
  pow_.push_back(1);
  for (int i = 0; i < n; ++i) {
    if (m_ > (std::int64_t{1} << 31) / p) throw InputError("LocalRing: p^n too large for word arithmetic");
    m_ *= p;
    pow_.push_back(m_);
  }
}

std::int64_t LocalRing::reduce(const mpz_class& x) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m_));
  return r.get_si();
}

std::int64_t LocalRing::inverse(std::int64_t unit) const { return inverse_mod(unit, m_); }

SmithProfile smith_profile(std::span<std::int64_t> w, std::size_t rows, std::size_t cols,
                           const LocalRing& ring) {
  SmithProfile out;
  const std::int64_t m = ring.modulus();
  if (m == 1) return out;
  // Active row/column index lists; small fixed sizes dominate.
  std::size_t row_idx[64], col_idx[64];
  if (rows > 64 || cols > 64) throw InputError("smith_profile: matrix too large");
  std::size_t nr = rows, nc = cols;
  for (std::size_t i = 0; i < rows; ++i) row_idx[i] = i;
  for (std::size_t j = 0; j < cols; ++j) col_idx[j] = j;

  while (nr && nc) {
    int best = ring.n();
    std::size_t bi = 0, bj = 0;
    for (std::size_t ri = 0; ri < nr && best; ++ri) {
      const std::int64_t* row = &w[row_idx[ri] * cols];
      for (std::size_t cj = 0; cj < nc; ++cj) {
        const std::int64_t x = row[col_idx[cj]];
        if (!x) continue;
        const int v = ring.val(x);
        if (v < best) {
          best = v;
          bi = ri;
          bj = cj;
          if (!v) break;
        }
      }
    }
    if (best == ring.n()) break;
    const std::size_t pr = row_idx[bi], pc = col_idx[bj];
    row_idx[bi] = row_idx[--nr];
    col_idx[bj] = col_idx[--nc];
    const std::int64_t scale = ring.power(best);
    const std::int64_t uinv = ring.inverse(w[pr * cols + pc] / scale);
    const std::int64_t* prow = &w[pr * cols];
    for (std::size_t ri = 0; ri < nr; ++ri) {
      std::int64_t* row = &w[row_idx[ri] * cols];
      const std::int64_t b = row[pc];
      if (!b) continue;
      const std::int64_t f = (b / scale) * uinv % m;
      for (std::size_t cj = 0; cj < nc; ++cj) {
        const std::size_t c = col_idx[cj];
        std::int64_t t = (row[c] - f * prow[c]) % m;
        row[c] = t < 0 ? t + m : t;
      }
    }
    ++out.rank;
    out.valuation_sum += best;
  }
  return out;
}

mpz_class kernel_size_mod(std::span<std::int64_t> w, std::size_t rows, std::size_t cols,
                          std::int64_t modulus) {
  const std::int64_t m = modulus;
  mpz_class result = 1;
  if (m == 1) return result;
  std::vector<std::size_t> row_idx(rows), col_idx(cols);
  std::iota(row_idx.begin(), row_idx.end(), 0);
  std::iota(col_idx.begin(), col_idx.end(), 0);
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return w[r * cols + c]; };

  while (!row_idx.empty() && !col_idx.empty()) {
    std::size_t bi = 0, bj = 0;
    std::int64_t best = 0;
    for (std::size_t ri = 0; ri < row_idx.size(); ++ri)
      for (std::size_t cj = 0; cj < col_idx.size(); ++cj) {
        const std::int64_t x = at(row_idx[ri], col_idx[cj]);
        if (x && (!best || x < best)) {
          best = x;
          bi = ri;
          bj = cj;
        }
      }
    if (!best) break;
    // Euclidean reduction of the pivot row and column over the integers.
    for (;;) {
      const std::size_t pr = row_idx[bi], pc = col_idx[bj];
      const std::int64_t a = at(pr, pc);
      bool clean = true;
      for (std::size_t ri = 0; ri < row_idx.size(); ++ri) {
        if (ri == bi) continue;
        const std::size_t r = row_idx[ri];
        const std::int64_t q = at(r, pc) / a;
        if (q)
          for (std::size_t c : col_idx) {
            std::int64_t t = (at(r, c) - q * at(pr, c)) % m;
            at(r, c) = t < 0 ? t + m : t;
          }
        if (at(r, pc)) clean = false;
      }
      for (std::size_t cj = 0; cj < col_idx.size(); ++cj) {
        if (cj == bj) continue;
        const std::size_t c = col_idx[cj];
        const std::int64_t q = at(pr, c) / a;
        if (q)
          for (std::size_t r : row_idx) {
            std::int64_t t = (at(r, c) - q * at(r, pc)) % m;
            at(r, c) = t < 0 ? t + m : t;
          }
        if (at(pr, c)) clean = false;
      }
      if (clean) break;
      // Move the pivot to the smallest remainder in its row or column.
      std::int64_t small = a;
      std::size_t nbi = bi, nbj = bj;
      for (std::size_t ri = 0; ri < row_idx.size(); ++ri) {
        const std::int64_t x = at(row_idx[ri], pc);
        if (x && x < small) {
          small = x;
          nbi = ri;
          nbj = bj;
        }
      }
      for (std::size_t cj = 0; cj < col_idx.size(); ++cj) {
        const std::int64_t x = at(pr, col_idx[cj]);
        if (x && x < small) {
          small = x;
          nbi = bi;
          nbj = cj;
        }
      }
      bi = nbi;
      bj = nbj;
    }
    result *= std::gcd(at(row_idx[bi], col_idx[bj]), m);
    row_idx.erase(row_idx.begin() + static_cast<std::ptrdiff_t>(bi));
    col_idx.erase(col_idx.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  for (std::size_t k = 0; k < row_idx.size(); ++k) result *= m;
  return result;
}

}  // namespace askzeta
