#include "askzeta/poly.hpp"

#include <sstream>
#include <utility>

#include "askzeta/error.hpp"

namespace askzeta {

Poly Poly::constant(std::size_t nvars, const mpz_class& c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(e, 1);
}

Poly Poly::monomial(const Exponents& exps, const mpz_class& c) {
  Poly p(exps.size());
  if (c != 0) p.terms_[exps] = c;
  return p;
}

int Poly::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

bool Poly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    if (d != degree) return false;
  }
  return true;
}

mpz_class Poly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class Poly::evaluate(std::span<const mpz_class> point) const {
  if (point.size() != nvars_) throw InputError("Poly::evaluate: wrong number of coordinates");
  mpz_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      mpz_class f;
      mpz_pow_ui(f.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      t *= f;
    }
    total += t;
  }
  return total;
}

void Poly::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (!o.is_zero() && !is_zero() && o.nvars_ != nvars_) throw InputError("Poly: variable count mismatch");
  if (is_zero()) nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!o.is_zero() && !is_zero() && o.nvars_ != nvars_) throw InputError("Poly: variable count mismatch");
  if (is_zero()) nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.nvars_, b.nvars_));
  if (a.is_zero() || b.is_zero()) return r;
  if (a.nvars_ != b.nvars_) throw InputError("Poly: variable count mismatch");
  Poly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InternalError("Poly::exact_divide: division by zero");
  Poly quotient(a.nvars_);
  Poly rest = a;
  const auto& [lead_e, lead_c] = *b.terms_.rbegin();
  while (!rest.is_zero()) {
    const auto& [re, rc] = *rest.terms_.rbegin();
    Exponents e(re.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = re[i] - lead_e[i];
      if (e[i] < 0) throw InternalError("Poly::exact_divide: division is not exact");
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      throw InternalError("Poly::exact_divide: division is not exact");
    const Poly t = monomial(e, rc / lead_c);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool wrote = false;
    if (mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      out << (wrote ? "*" : "") << (i < names.size() ? names[i] : "X" + std::to_string(i + 1));
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
    if (!wrote) out << '1';
    first = false;
  }
  return out.str();
}

namespace {

std::pair<std::size_t, Poly> poly_bareiss(PolyMatrix w, std::size_t nvars) {
  const std::size_t n = w.size(), m = n ? w[0].size() : 0;
  Poly prev = Poly::constant(nvars, 1);
  bool negate = false;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && w[piv][c].is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != rank) {
      std::swap(w[piv], w[rank]);
      negate = !negate;
    }
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < m; ++j)
        w[i][j] = Poly::exact_divide(w[rank][c] * w[i][j] - w[i][c] * w[rank][j], prev);
      w[i][c] = Poly(nvars);
    }
    prev = w[rank][c];
    ++rank;
  }
  Poly det(nvars);
  if (n == m) {
    if (rank == n) det = n ? (negate ? -prev : prev) : Poly::constant(nvars, 1);
  }
  return {rank, det};
}

std::size_t nvars_of(const PolyMatrix& m) {
  std::size_t k = 0;
  for (const auto& row : m)
    for (const auto& x : row) k = std::max(k, x.nvars());
  return k;
}

}  // namespace

std::size_t poly_rank(PolyMatrix m) {
  const std::size_t k = nvars_of(m);
  return poly_bareiss(std::move(m), k).first;
}

Poly poly_determinant(PolyMatrix m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw InputError("poly_determinant: matrix not square");
  const std::size_t k = nvars_of(m);
  return poly_bareiss(std::move(m), k).second;
}

}  // namespace askzeta
