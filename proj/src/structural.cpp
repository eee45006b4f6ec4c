#include "askzeta/structural.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "askzeta/closed_forms.hpp"
#include "askzeta/error.hpp"

namespace askzeta {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::certified: return "certified";
    case Tri::refuted: return "refuted";
    case Tri::inconclusive: return "inconclusive";
  }
  return "?";
}

bool PredicateResult::valid_at(std::int64_t p) const {
  return status == Tri::certified &&
         std::find(excluded_primes.begin(), excluded_primes.end(), p) == excluded_primes.end();
}

namespace {

mpz_class binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Advance a sorted k-subset of {0..n-1}; false after the last one.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void add_primes(std::vector<std::int64_t>& out, const mpz_class& n) {
  for (auto p : prime_divisors(n))
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}

std::optional<IntVector> find_witness(const LinearFormMatrix& c, std::size_t generic, const StructuralOptions& opts,
                                      std::size_t& rank_out) {
  const std::size_t k = c.nvars();
  auto test = [&](const IntVector& x) {
    if (std::all_of(x.begin(), x.end(), [](const mpz_class& v) { return v == 0; })) return false;
    const std::size_t r = rank_q(c.evaluate(x));
    if (r < generic) {
      rank_out = r;
      return true;
    }
    return false;
  };
  IntVector x(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::fill(x.begin(), x.end(), 0);
    x[i] = 1;
    if (test(x)) return x;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (int s : {1, -1}) {
        std::fill(x.begin(), x.end(), 0);
        x[i] = 1;
        x[j] = s;
        if (test(x)) return x;
      }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int t = 0; t < opts.witness_trials; ++t) {
    for (auto& v : x) v = dist(rng);
    if (test(x)) return x;
  }
  return std::nullopt;
}

/// The monomial criterion for a linear-form matrix: for i = 1..generic,
/// the degree-i minors must span all X_j^i.
PredicateResult monomial_criterion(const LinearFormMatrix& c, std::size_t generic, const StructuralOptions& opts) {
  PredicateResult res;
  const std::size_t nv = c.nvars();
  if (generic == 0) {
    res.status = Tri::certified;
    res.reason = "generic rank 0";
    return res;
  }
  const PolyMatrix full = c.to_poly();
  for (std::size_t i = 1; i <= generic; ++i) {
    const mpz_class count = binomial(c.rows(), i) * binomial(c.cols(), i);
    if (count > mpz_class(std::to_string(opts.minor_cap))) {
      res.status = Tri::inconclusive;
      res.reason = "minor budget exceeded in degree " + std::to_string(i);
      return res;
    }
    std::map<Poly::Exponents, std::size_t> index;
    std::vector<Poly> minors;
    std::vector<std::size_t> rs(i), cs(i);
    for (std::size_t a = 0; a < i; ++a) rs[a] = a;
    do {
      for (std::size_t a = 0; a < i; ++a) cs[a] = a;
      do {
        PolyMatrix sub(i, std::vector<Poly>(i));
        for (std::size_t a = 0; a < i; ++a)
          for (std::size_t b = 0; b < i; ++b) sub[a][b] = full[rs[a]][cs[b]];
        Poly det = poly_determinant(std::move(sub));
        if (det.is_zero()) continue;
        if (!det.is_homogeneous(static_cast<int>(i)))
          throw InternalError("minor of a linear-form matrix is not homogeneous of its size");
        for (const auto& [e, coeff] : det.terms()) index.try_emplace(e, index.size());
        minors.push_back(std::move(det));
      } while (next_subset(cs, c.cols()));
    } while (next_subset(rs, c.rows()));
    res.minor_counts.push_back(minors.size());
    for (std::size_t j = 0; j < nv; ++j) {
      Poly::Exponents e(nv, 0);
      e[j] = static_cast<int>(i);
      index.try_emplace(e, index.size());
    }
    std::vector<IntVector> rows;
    for (const auto& mnr : minors) {
      IntVector v(index.size());
      for (const auto& [e, coeff] : mnr.terms()) v[index.at(e)] = coeff;
      rows.push_back(std::move(v));
    }
    const auto h = hermite_normal_form(std::move(rows), index.size());
    res.span_dims.push_back(h.rows.size());
    for (std::size_t j = 0; j < nv; ++j) {
      Poly::Exponents e(nv, 0);
      e[j] = static_cast<int>(i);
      IntVector target(index.size());
      target[index.at(e)] = 1;
      const auto coords = hermite_coordinates(h, target);
      if (!coords) {
        res.status = Tri::inconclusive;
        res.reason = "X" + std::to_string(j + 1) + "^" + std::to_string(i) + " is not in the span of the " +
                     std::to_string(i) + "x" + std::to_string(i) + " minors";
        return res;
      }
      for (const auto& x : *coords) add_primes(res.excluded_primes, x.get_den());
    }
  }
  std::sort(res.excluded_primes.begin(), res.excluded_primes.end());
  res.status = Tri::certified;
  res.reason = "all pure powers lie in the graded minor spans";
  return res;
}

PredicateResult run_check(const LinearFormMatrix& c, const StructuralOptions& opts) {
  RankOptions ro;
  ro.seed = opts.seed;
  const std::size_t generic = generic_rank(c, ro);
  PredicateResult res = monomial_criterion(c, generic, opts);
  if (res.status == Tri::certified) return res;
  std::size_t r = 0;
  if (auto w = find_witness(c, generic, opts, r)) {
    res.status = Tri::refuted;
    res.reason = "rank " + std::to_string(r) + " < generic rank " + std::to_string(generic) + " at witness";
    res.witness = std::move(*w);
    res.witness_rank = r;
  }
  return res;
}

}  // namespace

PredicateResult check_o_maximal(const MatrixModule& m, const StructuralOptions& opts) {
  return run_check(orbit_matrix(m), opts);
}

PredicateResult check_k_minimal(const MatrixModule& m, const StructuralOptions& opts) {
  PredicateResult res = run_check(generic_element(m), opts);
  if (res.status == Tri::certified) {
    for (auto p : non_isolated_primes(m))
      if (std::find(res.excluded_primes.begin(), res.excluded_primes.end(), p) == res.excluded_primes.end())
        res.excluded_primes.push_back(p);
    std::sort(res.excluded_primes.begin(), res.excluded_primes.end());
  }
  return res;
}

ConstantRankResult check_constant_rank_fq(const MatrixModule& m, std::int64_t q, std::uint64_t budget) {
  const LocalRing ring(q, 1);
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(q), m.dim());
  if (total > mpz_class(std::to_string(budget)))
    throw BudgetExceeded("check_constant_rank_fq: " + total.get_str() + " elements exceed the budget");
  ConstantRankResult res;
  const std::size_t cells = m.d() * m.e();
  std::vector<std::vector<std::int64_t>> basis;
  for (const auto& a : m.basis()) {
    std::vector<std::int64_t> v;
    for (const auto& x : a.entries()) v.push_back(ring.reduce(x));
    basis.push_back(std::move(v));
  }
  std::vector<std::int64_t> digit(m.dim()), cur(cells), work(cells);
  const std::uint64_t n = total.get_ui();
  bool seen = false;
  for (std::uint64_t it = 0; it < n; ++it) {
    if (it > 0 && std::any_of(cur.begin(), cur.end(), [](std::int64_t v) { return v != 0; })) {
      work = cur;
      const int r = smith_profile(work, m.d(), m.e(), ring).rank;
      if (std::find(res.ranks_seen.begin(), res.ranks_seen.end(), r) == res.ranks_seen.end())
        res.ranks_seen.push_back(r);
      seen = true;
    }
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t s = 0; s < cells; ++s) cur[s] = (cur[s] + basis[i][s]) % q;
      if (++digit[i] < q) break;
      digit[i] = 0;
    }
  }
  std::sort(res.ranks_seen.begin(), res.ranks_seen.end());
  res.no_nonzero_elements = !seen;
  res.constant = res.ranks_seen.size() <= 1;
  res.rank = res.ranks_seen.empty() ? 0 : res.ranks_seen.front();
  return res;
}

StructureReport structure_report(const MatrixModule& m, const StructuralOptions& opts) {
  StructureReport rep;
  RankOptions ro;
  ro.seed = opts.seed;
  rep.grk = generic_element_rank(m, ro);
  rep.gor = generic_orbit_rank(m, ro);
  rep.o_maximal = check_o_maximal(m, opts);
  rep.k_minimal = check_k_minimal(m, opts);
  rep.constant_orbit_dim = rep.o_maximal.status;
  rep.constant_rank = rep.k_minimal.status;
  const int d = static_cast<int>(m.d());
  if (rep.o_maximal.status == Tri::certified) {
    rep.template_key = "mat(" + std::to_string(d) + "," + std::to_string(rep.gor) + ")";
    rep.template_formula = rep.gor == 0 ? QTRational(1) / one_minus(d, 1) : mat_form(d, static_cast<int>(rep.gor));
  }
  if (rep.k_minimal.status == Tri::certified && m.dim() > 0) {
    const int l = static_cast<int>(m.dim()), r = static_cast<int>(rep.grk);
    const QTRational f = constant_rank_form(d, l, r);
    if (rep.template_formula && !(*rep.template_formula == f))
      throw InternalError("O-maximal and K-minimal templates disagree for " + m.label());
    if (!rep.template_formula) {
      rep.template_key = "constant_rank(" + std::to_string(d) + "," + std::to_string(l) + "," + std::to_string(r) + ")";
      rep.template_formula = f;
    }
  }
  return rep;
}

}  // namespace askzeta
