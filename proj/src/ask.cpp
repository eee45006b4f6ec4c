#include "askzeta/ask.hpp"

#include <algorithm>
#include <thread>

#include "askzeta/error.hpp"

namespace askzeta {

std::string to_string(AskMethod m) {
  switch (m) {
    case AskMethod::automatic: return "auto";
    case AskMethod::average: return "average";
    case AskMethod::orbit: return "orbit";
    case AskMethod::both: return "both";
  }
  return "?";
}

AskMethod parse_ask_method(const std::string& s) {
  if (s == "auto") return AskMethod::automatic;
  if (s == "average") return AskMethod::average;
  if (s == "orbit") return AskMethod::orbit;
  if (s == "both") return AskMethod::both;
  throw InputError("unknown method '" + s + "'");
}

std::vector<mpq_class> CoeffSeq::coefficients() const {
  std::vector<mpq_class> out;
  for (const auto& v : values) out.push_back(v.value);
  return out;
}

namespace {

mpz_class ipow(std::int64_t b, std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
  return r;
}

std::uint64_t checked_count(const mpz_class& count, const AskOptions& opts, const char* what) {
  if (count > mpz_class(std::to_string(opts.budget)))
    throw BudgetExceeded(std::string(what) + ": " + count.get_str() + " points exceed the budget of " +
                         std::to_string(opts.budget));
  return count.get_ui();
}

/// Enumerates all digit vectors in (Z/m)^k, maintaining
/// state = sum_i digit_i * steps[i] mod m, and calls visit(state, work, acc)
/// on each. Work is split into contiguous index ranges, one accumulator per
/// range; the caller merges them.
template <class Acc, class Visit>
std::vector<Acc> enumerate(std::int64_t m, std::size_t k, std::uint64_t total,
                           const std::vector<std::vector<std::int64_t>>& steps, std::size_t state_size,
                           unsigned jobs, const Acc& init, const Visit& visit) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(1, total / 4096))));
  std::vector<Acc> accs(jobs, init);

  auto worker = [&](unsigned job) {
    const std::uint64_t begin = total * job / jobs, end = total * (job + 1) / jobs;
    if (begin == end) return;
    std::vector<std::int64_t> digit(k), state(state_size), work(state_size);
    std::uint64_t idx = begin;
    for (std::size_t i = 0; i < k; ++i) {
      digit[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(m));
      idx /= static_cast<std::uint64_t>(m);
      for (std::size_t s = 0; s < state_size; ++s) state[s] = (state[s] + digit[i] * steps[i][s]) % m;
    }
    Acc& acc = accs[job];
    for (std::uint64_t it = begin; it < end; ++it) {
      visit(state, work, acc);
      for (std::size_t i = 0; i < k; ++i) {
        const auto& step = steps[i];
        for (std::size_t s = 0; s < state_size; ++s) {
          const std::int64_t t = state[s] + step[s];
          state[s] = t >= m ? t - m : t;
        }
        if (++digit[i] < m) break;
        digit[i] = 0;
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
    for (auto& t : threads) t.join();
  }
  return accs;
}

using Histogram = std::vector<std::uint64_t>;

Histogram merge(const std::vector<Histogram>& hs) {
  Histogram out(hs.at(0).size());
  for (const auto& h : hs)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += h[i];
  return out;
}

std::vector<std::int64_t> reduce_flat(const IntMatrix& a, const LocalRing& ring) {
  std::vector<std::int64_t> out;
  for (const auto& x : a.entries()) out.push_back(ring.reduce(x));
  return out;
}

}  // namespace

mpz_class average_cost(const MatrixModule& m, const RingSpec& ring) {
  return ipow(ring.p(), m.dim() * static_cast<std::size_t>(ring.n()));
}

mpz_class orbit_cost(const MatrixModule& m, const RingSpec& ring) {
  return ipow(ring.p(), m.d() * static_cast<std::size_t>(ring.n()));
}

mpq_class ask_average(const MatrixModule& m, const RingSpec& ring, const AskOptions& opts) {
  if (ring.n() == 0) return 1;
  const std::uint64_t total = checked_count(average_cost(m, ring), opts, "ask_average");
  const LocalRing local(ring.p(), ring.n());
  const std::size_t d = m.d(), e = m.e(), n = static_cast<std::size_t>(ring.n());
  std::vector<std::vector<std::int64_t>> steps;
  for (const auto& a : m.basis()) steps.push_back(reduce_flat(a, local));

  const auto hist = merge(enumerate(local.modulus(), m.dim(), total, steps, d * e, opts.jobs,
                                    Histogram(d * n + 1), [&](auto& state, auto& work, Histogram& h) {
                                std::copy(state.begin(), state.end(), work.begin());
                                const auto prof = smith_profile(work, d, e, local);
                                ++h[prof.valuation_sum + (d - prof.rank) * n];
                              }));
  mpz_class sum = 0;
  for (std::size_t k = 0; k < hist.size(); ++k)
    if (hist[k]) sum += mpz_class(std::to_string(hist[k])) * ipow(ring.p(), k);
  mpq_class out(sum, ipow(ring.p(), m.dim() * n));
  out.canonicalize();
  return out;
}

mpq_class ask_orbit(const MatrixModule& m, const RingSpec& ring, const AskOptions& opts) {
  if (ring.n() == 0) return 1;
  const std::uint64_t total = checked_count(orbit_cost(m, ring), opts, "ask_orbit");
  const LocalRing local(ring.p(), ring.n());
  const std::size_t d = m.d(), e = m.e(), l = m.dim(), n = static_cast<std::size_t>(ring.n());
  // Incrementing x_j adds row j of every basis element to the rows of C(x).
  std::vector<std::vector<std::int64_t>> steps(d, std::vector<std::int64_t>(l * e));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < e; ++k) steps[j][i * e + k] = local.reduce(m.basis()[i](j, k));

  const auto hist = merge(enumerate(local.modulus(), d, total, steps, l * e, opts.jobs,
                                    Histogram(e * n + 1), [&](auto& state, auto& work, Histogram& h) {
                                std::copy(state.begin(), state.end(), work.begin());
                                const auto prof = smith_profile(work, l, e, local);
                                ++h[prof.rank * n - prof.valuation_sum];
                              }));
  const std::size_t top = e * n;
  mpz_class sum = 0;
  for (std::size_t k = 0; k < hist.size(); ++k)
    if (hist[k]) sum += mpz_class(std::to_string(hist[k])) * ipow(ring.p(), top - k);
  mpq_class out(sum, ipow(ring.p(), top));
  out.canonicalize();
  return out;
}

AskValue ask_value(const MatrixModule& m, const RingSpec& ring, AskMethod method, const AskOptions& opts) {
  AskValue v;
  v.p = ring.p();
  v.n = ring.n();
  if (method == AskMethod::automatic)
    method = average_cost(m, ring) <= orbit_cost(m, ring) ? AskMethod::average : AskMethod::orbit;
  v.method = method;
  switch (method) {
    case AskMethod::average: v.value = ask_average(m, ring, opts); break;
    case AskMethod::orbit: v.value = ask_orbit(m, ring, opts); break;
    default: {
      v.value = ask_average(m, ring, opts);
      const mpq_class other = ask_orbit(m, ring, opts);
      if (other != v.value)
        throw InternalError("ask engines disagree at p=" + std::to_string(ring.p()) + ", n=" +
                            std::to_string(ring.n()) + ": average " + v.value.get_str() + ", orbit " +
                            other.get_str());
    }
  }
  return v;
}

CoeffSeq ask_series(const MatrixModule& m, std::int64_t p, int n_max, AskMethod method,
                    const AskOptions& opts) {
  if (n_max < 0) throw InputError("ask_series: n_max must be nonnegative");
  CoeffSeq seq;
  seq.p = p;
  for (int n = 0; n <= n_max; ++n) seq.values.push_back(ask_value(m, RingSpec(p, n), method, opts));
  return seq;
}

mpq_class ask_mod_composite(const MatrixModule& m, std::int64_t modulus, const AskOptions& opts) {
  if (modulus < 1) throw InputError("ask_mod_composite: modulus must be positive");
  if (modulus >= (std::int64_t{1} << 31)) throw InputError("ask_mod_composite: modulus too large");
  if (modulus == 1) return 1;
  const std::size_t d = m.d(), e = m.e(), l = m.dim();
  const std::uint64_t total = checked_count(ipow(modulus, l), opts, "ask_mod_composite");
  std::vector<std::vector<std::int64_t>> steps;
  for (const auto& a : m.basis()) {
    std::vector<std::int64_t> s;
    for (const auto& x : a.entries()) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(modulus));
      s.push_back(r.get_si());
    }
    steps.push_back(std::move(s));
  }
  const auto sums = enumerate(modulus, l, total, steps, d * e, opts.jobs, mpz_class(0),
                              [&](auto& state, auto& work, mpz_class& acc) {
                                std::copy(state.begin(), state.end(), work.begin());
                                acc += kernel_size_mod(work, d, e, modulus);
                              });
  mpz_class sum = 0;
  for (const auto& s : sums) sum += s;
  mpq_class out(sum, ipow(modulus, l));
  out.canonicalize();
  return out;
}

mpz_class rank_distribution(int d, int e, int r, std::int64_t q) {
  if (d < 0 || e < 0 || r < 0 || r > std::min(d, e)) throw InputError("rank_distribution: r out of range");
  if (q < 2) throw InputError("rank_distribution: q must be at least 2");
  mpq_class out = 1;
  for (int i = 0; i < r; ++i) {
    const mpz_class num = (ipow(q, e) - ipow(q, i)) * (ipow(q, d - i) - 1);
    out *= mpq_class(num, ipow(q, i + 1) - 1);
  }
  out.canonicalize();
  if (out.get_den() != 1) throw InternalError("rank_distribution: non-integral count");
  return out.get_num();
}

}  // namespace askzeta
