#include <doctest.h>

#include <random>

#include "askzeta/ask.hpp"
#include "askzeta/catalog.hpp"
#include "askzeta/grouporbits.hpp"
#include "askzeta/lie.hpp"
#include "oracles.hpp"

using namespace askzeta;

namespace {

mpq_class ask(const MatrixModule& m, std::int64_t p, int n) {
  return ask_value(m, RingSpec(p, n), AskMethod::automatic).value;
}

mpq_class ppow(std::int64_t p, long k) {
  mpq_class r = 1;
  for (long i = 0; i < std::abs(k); ++i) r *= p;
  return k < 0 ? 1 / r : r;
}

struct Case {
  MatrixModule m;
  std::int64_t p;
  int n;
};

// Random modules with all engines cheap enough.
std::vector<Case> cases(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Case> out;
  while (static_cast<int>(out.size()) < count) {
    const std::size_t d = 1 + rng() % 3, e = 1 + rng() % 3, l = 1 + rng() % 4;
    const std::int64_t p = rng() % 2 ? 2 : 3;
    const int n = 1 + static_cast<int>(rng() % 2);
    auto m = oracle::random_module(rng, d, e, l);
    const RingSpec ring(p, n);
    if (std::min(average_cost(m, ring), orbit_cost(m, ring)) > 200000) continue;
    out.push_back({std::move(m), p, n});
  }
  return out;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("direct sums multiply") {
    const auto cs = cases(101, 20);
    for (std::size_t i = 0; i + 1 < cs.size(); i += 2) {
      const auto& a = cs[i];
      const auto b = cs[i + 1].m;
      const auto s = transform_direct_sum(a.m, b);
      if (std::min(average_cost(s, RingSpec(a.p, a.n)), orbit_cost(s, RingSpec(a.p, a.n))) > 2000000) continue;
      CHECK(ask(s, a.p, a.n) == ask(a.m, a.p, a.n) * ask(b, a.p, a.n));
    }
  }

  TEST_CASE("transpose shifts by |R|^(e - d)") {
    for (const auto& c : cases(102, 25)) {
      const long shift = static_cast<long>(c.m.e()) - static_cast<long>(c.m.d());
      CHECK(ask(transform_transpose(c.m), c.p, c.n) == ppow(c.p, shift * c.n) * ask(c.m, c.p, c.n));
    }
  }

  TEST_CASE("zero rows and columns") {
    for (const auto& c : cases(103, 25)) {
      const mpq_class base = ask(c.m, c.p, c.n);
      CHECK(ask(transform_add_zero_row(c.m, 0), c.p, c.n) == ppow(c.p, c.n) * base);
      CHECK(ask(transform_add_zero_row(c.m, c.m.d()), c.p, c.n) == ppow(c.p, c.n) * base);
      CHECK(ask(transform_add_zero_col(c.m, c.m.e()), c.p, c.n) == base);
    }
  }

  TEST_CASE("rescaling by p^k") {
    // ask_n(p^k M) = p^(kd) ask_(n-k)(M) for k <= n
    for (const auto& c : cases(104, 15)) {
      const long d = static_cast<long>(c.m.d());
      for (int k = 1; k <= c.n; ++k) {
        const auto s = transform_rescale(c.m, k, c.p);
        CHECK(ask(s, c.p, c.n) == ppow(c.p, k * d) * ask(c.m, c.p, c.n - k));
      }
      // beyond the level everything is zero
      CHECK(ask(transform_rescale(c.m, c.n + 1, c.p), c.p, c.n) == ppow(c.p, c.n * d));
    }
  }

  TEST_CASE("composite moduli are multiplicative") {
    std::mt19937_64 rng(105);
    for (int t = 0; t < 8; ++t) {
      const auto m = oracle::random_module(rng, 1 + t % 2, 2, 1 + t % 3);
      for (auto [a, b] : {std::pair{2L, 3L}, {4L, 3L}, {2L, 5L}}) {
        const mpq_class whole = ask_mod_composite(m, a * b);
        CHECK(whole == ask_mod_composite(m, a) * ask_mod_composite(m, b));
      }
      CHECK(ask_mod_composite(m, 9) == ask(m, 3, 2));
    }
  }

  TEST_CASE("coefficient bounds") {
    for (const auto& c : cases(106, 30)) {
      const mpq_class v = ask(c.m, c.p, c.n);
      const long d = static_cast<long>(c.m.d()), e = static_cast<long>(c.m.e());
      CHECK(v >= 1);
      CHECK(v >= ppow(c.p, (d - e) * c.n));
      CHECK(v <= ppow(c.p, d * c.n));
      // ask is a sum of 1/|xM| and each |xM| divides |R|^e
      const mpq_class scaled = ppow(c.p, e * c.n) * v;
      CHECK(scaled.get_den() == 1);
    }
  }

  TEST_CASE("nilpotent algebras give integers") {
    for (const char* key : {"n(2)", "n(3)", "n(4)", "L_{4,3}", "L_{5,6}"}) {
      const auto l = catalog_module(key);
      for (auto [p, n] : {std::pair{5L, 1}, {7L, 1}, {5L, 2}}) {
        if (std::min(orbit_cost(l, RingSpec(p, n)), average_cost(l, RingSpec(p, n))) > 3000000) continue;
        CHECK_MESSAGE(oc_via_ask(l, p, n).series.values.back().value.get_den() == 1, key);
      }
    }
    for (auto [d, i] : graaf_algebra_list()) {
      const auto ad = graaf_algebra(d, i).ad_module();
      for (auto [p, n] : {std::pair{5L, 1}, {7L, 1}, {5L, 2}}) {
        if (std::min(orbit_cost(ad, RingSpec(p, n)), average_cost(ad, RingSpec(p, n))) > 3000000) continue;
        CHECK_MESSAGE(ask(ad, p, n).get_den() == 1, "L_{" << d << "," << i << "}");
      }
    }
  }
}
