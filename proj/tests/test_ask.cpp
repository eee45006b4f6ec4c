#include <doctest.h>

#include <random>

#include "askzeta/ask.hpp"
#include "askzeta/catalog.hpp"
#include "askzeta/error.hpp"
#include "oracles.hpp"

using namespace askzeta;

TEST_CASE("both engines agree with enumeration on small modules") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t d = 1 + trial % 2, e = 1 + (trial / 2) % 3, l = 1 + trial % 3;
    const auto m = oracle::random_module(rng, d, e, l);
    for (auto [p, n] : {std::pair{2L, 1}, {3L, 1}, {2L, 2}}) {
      const RingSpec ring(p, n);
      const std::int64_t q = oracle::ipow(p, n);
      if (oracle::ipow(q, static_cast<int>(m.dim() + d)) > 50000) continue;
      const mpq_class want = oracle::ask_by_elements(m, q);
      CHECK(ask_average(m, ring) == want);
      CHECK(ask_orbit(m, ring) == want);
      CHECK(oracle::ask_by_orbits(m, q) == want);
    }
  }
}

TEST_CASE("full matrix modules") {
  for (int d = 1; d <= 2; ++d)
    for (int e = 1; e <= 3; ++e)
      for (auto [p, n] : {std::pair{2L, 1}, {2L, 2}, {3L, 1}, {3L, 2}}) {
        const auto m = catalog_module("mat(" + std::to_string(d) + "," + std::to_string(e) + ")");
        CHECK(ask_value(m, RingSpec(p, n), AskMethod::automatic).value == oracle::ask_full_matrix(d, e, p, n));
      }
}

TEST_CASE("values quoted for so(3) and n(3)") {
  // so(3) at q = 5: 1 + q - q^-2
  CHECK(ask_value(catalog_module("so(3)"), RingSpec(5, 1), AskMethod::both).value == mpq_class(149, 25));
  const auto s = ask_series(catalog_module("n(3)"), 3, 2, AskMethod::both);
  REQUIRE(s.values.size() == 3);
  CHECK(s.values[0].value == 1);
  // n(3), q = 3: coefficient 1 is 2q - 1 + ... checked against enumeration
  CHECK(s.values[1].value == oracle::ask_by_elements(catalog_module("n(3)"), 3));
  CHECK(s.values[2].value == oracle::ask_by_elements(catalog_module("n(3)"), 9));
  CHECK(s.values[2].value == 37);
}

TEST_CASE("level zero and the zero module") {
  CHECK(ask_average(catalog_module("so(3)"), RingSpec(3, 0)) == 1);
  // every x is in the kernel of 0: ask = |R|^d
  CHECK(ask_value(catalog_module("zero(2,3)"), RingSpec(3, 2), AskMethod::both).value == 81);
}

TEST_CASE("composite moduli") {
  const auto m = catalog_module("mat(1,1)");
  CHECK(ask_mod_composite(m, 6) == oracle::ask_by_elements(m, 6));
  CHECK(ask_mod_composite(m, 6) == mpq_class(5, 2));
  const auto so3 = catalog_module("so(3)");
  CHECK(ask_mod_composite(so3, 6) == oracle::ask_by_elements(so3, 6));
  CHECK(ask_mod_composite(so3, 1) == 1);
}

TEST_CASE("worker count does not change results") {
  const auto m = catalog_module("sl(2)");
  AskOptions one, four;
  four.jobs = 4;
  for (auto meth : {AskMethod::average, AskMethod::orbit}) {
    CHECK(ask_value(m, RingSpec(3, 2), meth, one).value == ask_value(m, RingSpec(3, 2), meth, four).value);
  }
}

TEST_CASE("budget") {
  AskOptions tiny;
  tiny.budget = 5;
  CHECK_THROWS_AS(ask_average(catalog_module("mat(2,2)"), RingSpec(3, 1), tiny), BudgetExceeded);
  CHECK_THROWS_AS(ask_orbit(catalog_module("mat(2,2)"), RingSpec(3, 1), tiny), BudgetExceeded);
  CHECK(average_cost(catalog_module("mat(2,2)"), RingSpec(3, 1)) == 81);
  CHECK(orbit_cost(catalog_module("mat(2,2)"), RingSpec(3, 1)) == 9);
}

TEST_CASE("method names") {
  for (auto m : {AskMethod::automatic, AskMethod::average, AskMethod::orbit, AskMethod::both})
    CHECK(parse_ask_method(to_string(m)) == m);
  CHECK_THROWS_AS(parse_ask_method("fast"), InputError);
}

TEST_CASE("rank distribution over F_q") {
  for (std::int64_t q : {2, 3})
    for (int d = 1; d <= 2; ++d)
      for (int e = 1; e <= 3; ++e) {
        std::vector<long> count(3, 0);
        oracle::each_vector(static_cast<std::size_t>(d * e), q, [&](const oracle::Vec& v) {
          IntMatrix a(d, e);
          for (std::size_t t = 0; t < v.size(); ++t) a.entries()[t] = v[t];
          const auto img = oracle::image_count(a, q);
          int r = 0;
          for (std::int64_t s = 1; s < img; s *= q) ++r;
          ++count[r];
        });
        for (int r = 0; r <= std::min(d, e); ++r) CHECK(rank_distribution(d, e, r, q) == count[r]);
        CHECK_THROWS_AS(rank_distribution(d, e, std::min(d, e) + 1, q), InputError);
      }
}
