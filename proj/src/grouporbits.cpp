#include "askzeta/grouporbits.hpp"

#include <numeric>
#include <unordered_map>

#include "askzeta/error.hpp"

namespace askzeta {

namespace {

using Word = std::int64_t;
using Flat = std::vector<Word>;

Flat flat_mod(const IntMatrix& a, const LocalRing& ring) {
  Flat v;
  for (const auto& x : a.entries()) v.push_back(ring.reduce(x));
  return v;
}

Flat mul_mod(const Flat& a, const Flat& b, std::size_t d, Word m) {
  Flat c(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Word x = a[i * d + k];
      if (!x) continue;
      for (std::size_t j = 0; j < d; ++j) c[i * d + j] = (c[i * d + j] + x * b[k * d + j]) % m;
    }
  return c;
}

IntMatrix to_matrix(const Flat& v, std::size_t d) {
  IntMatrix a(d, d);
  for (std::size_t i = 0; i < d * d; ++i) a.entries()[i] = static_cast<long>(v[i]);
  return a;
}

struct FlatHash {
  std::size_t operator()(const Flat& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Word x : v) h = (h ^ static_cast<std::uint64_t>(x)) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

mpz_class ipow(std::int64_t b, std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
  return r;
}

void require_level(const RingSpec& ring, std::size_t d, const char* what) {
  if (ring.n() < 1) throw InputError(std::string(what) + ": level must be at least 1");
  if (ring.p() < static_cast<std::int64_t>(d))
    throw InputError(std::string(what) + " undefined: factorial denominators not invertible (p < d)");
}

IntMatrix reduce_matrix(const IntMatrix& a, const LocalRing& ring) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.entries().size(); ++i) r.entries()[i] = static_cast<long>(ring.reduce(a.entries()[i]));
  return r;
}

}  // namespace

IntMatrix exp_nilpotent(const IntMatrix& a, const RingSpec& ring) {
  const std::size_t d = a.rows();
  if (a.cols() != d) throw InputError("exp_nilpotent: matrix not square");
  require_level(ring, d, "exp");
  const LocalRing local(ring.p(), ring.n());
  IntMatrix sum = IntMatrix::identity(d), power = IntMatrix::identity(d);
  mpz_class fact = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    power = power * a;
    if (i == d) {
      if (!power.is_zero()) throw InputError("exp_nilpotent: matrix is not nilpotent");
      break;
    }
    fact *= static_cast<unsigned long>(i);
    const mpz_class inv = local.inverse(local.reduce(fact));
    sum = sum + inv * power;
  }
  return reduce_matrix(sum, local);
}

IntMatrix log_unipotent(const IntMatrix& g, const RingSpec& ring) {
  const std::size_t d = g.rows();
  if (g.cols() != d) throw InputError("log_unipotent: matrix not square");
  require_level(ring, d, "log");
  const LocalRing local(ring.p(), ring.n());
  const IntMatrix u = reduce_matrix(g - IntMatrix::identity(d), local);
  IntMatrix sum(d, d), power = IntMatrix::identity(d);
  for (std::size_t i = 1; i <= d; ++i) {
    power = reduce_matrix(power * u, local);
    if (i == d) {
      if (!power.is_zero()) throw InputError("log_unipotent: matrix is not unipotent mod p^n");
      break;
    }
    mpz_class inv = local.inverse(static_cast<std::int64_t>(i));
    if (i % 2 == 0) inv = -inv;
    sum = sum + inv * power;
  }
  return reduce_matrix(sum, local);
}

void check_nilpotent_algebra(const MatrixModule& l) {
  if (l.d() != l.e()) throw InputError("nilpotent algebra: matrices are not square");
  (void)LieAlgebra::from_module(l);
  const std::size_t d = l.d();
  if (d == 0 || l.dim() == 0) return;
  const PolyMatrix x = generic_element(l).to_poly();
  const std::size_t nv = l.dim();
  PolyMatrix power = x;
  for (std::size_t k = 1; k < d; ++k) {
    PolyMatrix next(d, std::vector<Poly>(d, Poly(nv)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t t = 0; t < d; ++t)
          if (!power[i][t].is_zero() && !x[t][j].is_zero()) next[i][j] += power[i][t] * x[t][j];
    power = std::move(next);
  }
  for (const auto& row : power)
    for (const auto& e : row)
      if (!e.is_zero()) throw InputError("nilpotent algebra: the span contains non-nilpotent matrices");
}

std::vector<mpz_class> oc_coefficients(const GroupGenSet& g, std::int64_t p, int n_max, const GroupOptions& opts) {
  if (n_max < 0) throw InputError("oc_coefficients: n_max must be nonnegative");
  const std::size_t d = g.d;
  for (const auto& a : g.generators) {
    if (a.rows() != d || a.cols() != d) throw InputError("oc_coefficients: generator has wrong shape");
    if (pval(determinant(a), p).capped(1) != 0)
      throw InputError("oc_coefficients: generator not invertible mod " + std::to_string(p));
  }
  std::vector<mpz_class> out{1};
  for (int n = 1; n <= n_max; ++n) {
    const mpz_class size = ipow(p, d * static_cast<std::size_t>(n));
    if (size > mpz_class(std::to_string(opts.budget)))
      throw BudgetExceeded("oc_coefficients: " + size.get_str() + " points exceed the budget");
    const LocalRing ring(p, n);
    const Word m = ring.modulus();
    std::vector<Flat> gens;
    for (const auto& a : g.generators) gens.push_back(flat_mod(a, ring));
    const std::uint64_t total = size.get_ui();
    std::vector<bool> seen(total, false);
    std::vector<std::uint64_t> stack;
    Flat x(d), y(d);
    auto decode = [&](std::uint64_t idx, Flat& v) {
      for (std::size_t i = 0; i < d; ++i) {
        v[i] = static_cast<Word>(idx % static_cast<std::uint64_t>(m));
        idx /= static_cast<std::uint64_t>(m);
      }
    };
    auto encode = [&](const Flat& v) {
      std::uint64_t idx = 0;
      for (std::size_t i = d; i-- > 0;) idx = idx * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(v[i]);
      return idx;
    };
    std::uint64_t orbits = 0;
    for (std::uint64_t start = 0; start < total; ++start) {
      if (seen[start]) continue;
      ++orbits;
      seen[start] = true;
      stack.push_back(start);
      while (!stack.empty()) {
        const std::uint64_t cur = stack.back();
        stack.pop_back();
        decode(cur, x);
        for (const auto& a : gens) {
          for (std::size_t j = 0; j < d; ++j) {
            Word s = 0;
            for (std::size_t i = 0; i < d; ++i) s = (s + x[i] * a[i * d + j]) % m;
            y[j] = s;
          }
          const std::uint64_t nxt = encode(y);
          if (!seen[nxt]) {
            seen[nxt] = true;
            stack.push_back(nxt);
          }
        }
      }
    }
    out.emplace_back(std::to_string(orbits));
  }
  return out;
}

GroupGenSet exp_generators(const MatrixModule& l, const RingSpec& ring) {
  GroupGenSet g;
  g.d = l.d();
  g.label = l.label().empty() ? "exp" : "exp(" + l.label() + ")";
  for (const auto& a : l.basis()) g.generators.push_back(exp_nilpotent(a, ring));
  return g;
}

std::vector<mpz_class> cc_coefficients_direct(const MatrixModule& l, std::int64_t p, int n_max,
                                              const GroupOptions& opts) {
  if (n_max < 0) throw InputError("cc_coefficients_direct: n_max must be nonnegative");
  check_nilpotent_algebra(l);
  const std::size_t d = l.d();
  std::vector<mpz_class> out{1};
  for (int n = 1; n <= n_max; ++n) {
    const RingSpec spec(p, n);
    require_level(spec, d, "exp");
    const mpz_class bound = ipow(p, l.dim() * static_cast<std::size_t>(n));
    if (bound > mpz_class(std::to_string(opts.budget)))
      throw BudgetExceeded("cc_coefficients_direct: group order bound " + bound.get_str() + " exceeds the budget");
    const LocalRing ring(p, n);
    const Word m = ring.modulus();
    std::vector<Flat> gens, invs;
    for (const auto& a : l.basis()) {
      gens.push_back(flat_mod(exp_nilpotent(a, spec), ring));
      invs.push_back(flat_mod(exp_nilpotent(mpz_class(-1) * a, spec), ring));
    }
    std::unordered_map<Flat, std::size_t, FlatHash> index;
    std::vector<Flat> elems;
    elems.push_back(flat_mod(IntMatrix::identity(d), ring));
    index.emplace(elems.back(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (const auto& g : gens) {
        Flat h = mul_mod(elems[i], g, d, m);
        if (index.try_emplace(h, elems.size()).second) {
          elems.push_back(std::move(h));
          if (elems.size() > bound) throw InternalError("cc_coefficients_direct: group larger than p^{ln}");
        }
      }
    std::vector<std::size_t> parent(elems.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t classes = elems.size();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Flat c = mul_mod(mul_mod(invs[k], elems[i], d, m), gens[k], d, m);
        const auto it = index.find(c);
        if (it == index.end()) throw InternalError("cc_coefficients_direct: group not closed under conjugation");
        const std::size_t a = find(i), b = find(it->second);
        if (a != b) {
          parent[a] = b;
          --classes;
        }
      }
    out.emplace_back(static_cast<unsigned long>(classes));
  }
  return out;
}

namespace {

void group_warnings(const MatrixModule& l, std::int64_t p, std::vector<std::string>& w) {
  if (p < static_cast<std::int64_t>(l.d())) w.push_back("hypothesis violated: p < d");
  if (!is_isolated_at(l, p)) w.push_back("hypothesis violated: algebra not isolated at p");
  for (const auto& a : l.basis())
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j <= i && j < a.cols(); ++j)
        if (a(i, j) != 0) {
          w.push_back("hypothesis violated: algebra not contained in n_d");
          return;
        }
}

}  // namespace

BridgeResult cc_via_ask(const MatrixModule& l, std::int64_t p, int n_max, AskMethod method, const AskOptions& opts) {
  check_nilpotent_algebra(l);
  BridgeResult r;
  group_warnings(l, p, r.warnings);
  r.series = ask_series(ad_representation(l), p, n_max, method, opts);
  return r;
}

BridgeResult cc_via_ask(const LieAlgebra& l, std::int64_t p, int n_max, AskMethod method, const AskOptions& opts) {
  BridgeResult r;
  if (!l.satisfies_jacobi()) throw InputError("structure constants violate the Jacobi identity");
  (void)l.nilpotency_class();
  if (p < static_cast<std::int64_t>(l.dim())) r.warnings.push_back("hypothesis violated: p < dim");
  r.series = ask_series(l.ad_module(), p, n_max, method, opts);
  return r;
}

BridgeResult oc_via_ask(const MatrixModule& l, std::int64_t p, int n_max, AskMethod method, const AskOptions& opts) {
  check_nilpotent_algebra(l);
  BridgeResult r;
  group_warnings(l, p, r.warnings);
  r.series = ask_series(l, p, n_max, method, opts);
  return r;
}

GroupGenSet semidirect_embed(const MatrixModule& m) {
  GroupGenSet g;
  const std::size_t d = m.d(), e = m.e();
  g.d = d + e;
  g.label = m.label().empty() ? "M*" : m.label() + "*";
  for (const auto& a : m.basis()) {
    IntMatrix b = IntMatrix::identity(d + e);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < e; ++j) b(i, d + j) = a(i, j);
    g.generators.push_back(std::move(b));
  }
  return g;
}

GroupGenSet gl_generators(std::size_t d, std::int64_t p) {
  if (!is_prime(p)) throw InputError("gl_generators: p must be prime");
  GroupGenSet g;
  g.d = d;
  g.label = "GL_" + std::to_string(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) g.generators.push_back(IntMatrix::identity(d) + IntMatrix::unit(d, d, i, j));
  std::vector<long> units;
  if (p == 2) {
    units = {-1, 5};
  } else {
    // A primitive root mod p^2 generates the units mod every power of p.
    const std::int64_t m = p * p;
    for (std::int64_t r = 2; r < m; ++r) {
      if (r % p == 0) continue;
      std::int64_t x = 1, order = 0;
      do {
        x = x * r % m;
        ++order;
      } while (x != 1);
      if (order == p * (p - 1)) {
        units = {static_cast<long>(r)};
        break;
      }
    }
  }
  if (d > 0)
    for (long u : units) {
      IntMatrix a = IntMatrix::identity(d);
      a(0, 0) = u;
      g.generators.push_back(std::move(a));
    }
  return g;
}

}  // namespace askzeta
