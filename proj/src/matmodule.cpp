#include "askzeta/matmodule.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "askzeta/error.hpp"

namespace askzeta {

namespace {

IntVector flatten(const IntMatrix& a) { return IntVector(a.entries().begin(), a.entries().end()); }

IntMatrix unflatten(const IntVector& v, std::size_t d, std::size_t e) {
  IntMatrix a(d, e);
  std::copy(v.begin(), v.end(), a.entries().begin());
  return a;
}

}  // namespace

MatrixModule::MatrixModule(std::size_t d, std::size_t e, std::vector<IntMatrix> spanning,
                           std::string label)
    : d_(d), e_(e), label_(std::move(label)) {
  std::vector<IntVector> rows;
  rows.reserve(spanning.size());
  for (const auto& a : spanning) {
    if (a.rows() != d || a.cols() != e)
      throw InputError("MatrixModule: basis element of shape " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + ", expected " + std::to_string(d) + "x" +
                       std::to_string(e));
    rows.push_back(flatten(a));
  }
  hermite_ = hermite_normal_form(std::move(rows), d * e);
  for (const auto& r : hermite_.rows) basis_.push_back(unflatten(r, d, e));
}

IntMatrix MatrixModule::coefficient_matrix() const {
  IntMatrix c(dim(), d_ * e_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < d_ * e_; ++k) c(i, k) = hermite_.rows[i][k];
  return c;
}

std::optional<RatVector> MatrixModule::coordinates(const IntMatrix& a) const {
  if (a.rows() != d_ || a.cols() != e_) return std::nullopt;
  return hermite_coordinates(hermite_, flatten(a));
}

bool MatrixModule::contains(const IntMatrix& a) const {
  auto coords = coordinates(a);
  if (!coords) return false;
  return std::all_of(coords->begin(), coords->end(),
                     [](const mpq_class& x) { return x.get_den() == 1; });
}

IntMatrix MatrixModule::element(std::span<const mpz_class> coeffs) const {
  if (coeffs.size() != dim()) throw InputError("MatrixModule::element: wrong number of coefficients");
  IntMatrix a(d_, e_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coeffs[i] == 0) continue;
    auto src = basis_[i].entries();
    auto dst = a.entries();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += coeffs[i] * src[k];
  }
  return a;
}

IntMatrix LinearFormMatrix::evaluate(std::span<const mpz_class> point) const {
  if (point.size() != nvars_) throw InputError("LinearFormMatrix::evaluate: wrong point size");
  IntMatrix a(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      mpz_class s = 0;
      const auto& c = coeff(i, j);
      for (std::size_t k = 0; k < nvars_; ++k)
        if (c[k] != 0) s += c[k] * point[k];
      a(i, j) = s;
    }
  return a;
}

PolyMatrix LinearFormMatrix::to_poly() const {
  PolyMatrix m(rows_, std::vector<Poly>(cols_, Poly(nvars_)));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t k = 0; k < nvars_; ++k) {
        const auto& c = coeff(i, j)[k];
        if (c != 0) m[i][j] += Poly::constant(nvars_, c) * Poly::variable(nvars_, k);
      }
  return m;
}

std::string LinearFormMatrix::to_string() const {
  std::ostringstream out;
  auto p = to_poly();
  for (std::size_t i = 0; i < rows_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << p[i][j].to_string();
    out << "]\n";
  }
  return out.str();
}

LinearFormMatrix orbit_matrix(const MatrixModule& m) {
  LinearFormMatrix c(m.dim(), m.e(), m.d());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = 0; k < m.e(); ++k)
      for (std::size_t j = 0; j < m.d(); ++j) c.coeff(i, k)[j] = m.basis()[i](j, k);
  return c;
}

LinearFormMatrix generic_element(const MatrixModule& m) {
  LinearFormMatrix c(m.d(), m.e(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t r = 0; r < m.d(); ++r)
      for (std::size_t k = 0; k < m.e(); ++k) c.coeff(r, k)[i] = m.basis()[i](r, k);
  return c;
}

std::size_t generic_rank(const LinearFormMatrix& c, const RankOptions& opts) {
  const std::size_t bound = std::min(c.rows(), c.cols());
  if (bound == 0 || c.nvars() == 0) return 0;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  std::vector<mpz_class> point(c.nvars());
  std::size_t sampled = 0;
  for (int s = 0; s < opts.samples && sampled < bound; ++s) {
    for (auto& x : point) x = dist(rng);
    sampled = std::max(sampled, rank_q(c.evaluate(point)));
  }
  if (bound <= opts.symbolic_limit) {
    const std::size_t symbolic = poly_rank(c.to_poly());
    if (symbolic != sampled)
      throw InternalError("generic_rank: symbolic rank " + std::to_string(symbolic) +
                          " disagrees with sampled rank " + std::to_string(sampled));
  }
  return sampled;
}

std::size_t generic_element_rank(const MatrixModule& m, const RankOptions& opts) {
  return generic_rank(generic_element(m), opts);
}

std::size_t generic_orbit_rank(const MatrixModule& m, const RankOptions& opts) {
  return generic_rank(orbit_matrix(m), opts);
}

MatrixModule transform_transpose(const MatrixModule& m) {
  std::vector<IntMatrix> b;
  for (const auto& a : m.basis()) b.push_back(a.transposed());
  return MatrixModule(m.e(), m.d(), std::move(b), m.label().empty() ? "" : m.label() + "^T");
}

MatrixModule transform_direct_sum(const MatrixModule& a, const MatrixModule& b) {
  const std::size_t d = a.d() + b.d(), e = a.e() + b.e();
  std::vector<IntMatrix> basis;
  for (const auto& x : a.basis()) {
    IntMatrix y(d, e);
    for (std::size_t i = 0; i < a.d(); ++i)
      for (std::size_t j = 0; j < a.e(); ++j) y(i, j) = x(i, j);
    basis.push_back(std::move(y));
  }
  for (const auto& x : b.basis()) {
    IntMatrix y(d, e);
    for (std::size_t i = 0; i < b.d(); ++i)
      for (std::size_t j = 0; j < b.e(); ++j) y(a.d() + i, a.e() + j) = x(i, j);
    basis.push_back(std::move(y));
  }
  return MatrixModule(d, e, std::move(basis));
}

MatrixModule transform_add_zero_row(const MatrixModule& m, std::size_t position) {
  if (position > m.d()) throw InputError("add_zero_row: position out of range");
  std::vector<IntMatrix> basis;
  for (const auto& x : m.basis()) {
    IntMatrix y(m.d() + 1, m.e());
    for (std::size_t i = 0; i < m.d(); ++i)
      for (std::size_t j = 0; j < m.e(); ++j) y(i < position ? i : i + 1, j) = x(i, j);
    basis.push_back(std::move(y));
  }
  return MatrixModule(m.d() + 1, m.e(), std::move(basis));
}

MatrixModule transform_add_zero_col(const MatrixModule& m, std::size_t position) {
  if (position > m.e()) throw InputError("add_zero_col: position out of range");
  std::vector<IntMatrix> basis;
  for (const auto& x : m.basis()) {
    IntMatrix y(m.d(), m.e() + 1);
    for (std::size_t i = 0; i < m.d(); ++i)
      for (std::size_t j = 0; j < m.e(); ++j) y(i, j < position ? j : j + 1) = x(i, j);
    basis.push_back(std::move(y));
  }
  return MatrixModule(m.d(), m.e() + 1, std::move(basis));
}

MatrixModule transform_rescale(const MatrixModule& m, int power, std::int64_t p) {
  if (power < 0) throw InputError("rescale: negative power");
  if (!is_prime(p)) throw InputError("rescale: p must be prime");
  mpz_class f;
  mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(power));
  std::vector<IntMatrix> basis;
  for (const auto& x : m.basis()) basis.push_back(f * x);
  return MatrixModule(m.d(), m.e(), std::move(basis));
}

bool is_isolated_at(const MatrixModule& m, std::int64_t p) {
  const auto type = equivalence_type(m.coefficient_matrix(), p);
  return std::all_of(type.lambdas.begin(), type.lambdas.end(), [](int l) { return l == 0; });
}

std::vector<std::int64_t> non_isolated_primes(const MatrixModule& m) {
  // The product of the Hermite pivots is a maximal minor, so every prime
  // at which the module fails to be saturated divides it.
  mpz_class prod = 1;
  const auto c = m.coefficient_matrix();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = 0; k < c.cols(); ++k)
      if (c(i, k) != 0) {
        prod *= c(i, k);
        break;
      }
  std::vector<std::int64_t> out;
  for (auto p : prime_divisors(prod))
    if (!is_isolated_at(m, p)) out.push_back(p);
  return out;
}

}  // namespace askzeta
