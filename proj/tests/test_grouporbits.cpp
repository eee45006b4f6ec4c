#include <doctest.h>

#include "askzeta/catalog.hpp"
#include "askzeta/error.hpp"
#include "askzeta/grouporbits.hpp"
#include "askzeta/lie.hpp"
#include "oracles.hpp"

using namespace askzeta;

namespace {

// Upper unitriangular d x d matrices over Z/m, as flat vectors.
std::vector<oracle::Vec> unitriangular(std::size_t d, std::int64_t m) {
  std::vector<oracle::Vec> out;
  const std::size_t free = d * (d - 1) / 2;
  oracle::each_vector(free, m, [&](const oracle::Vec& v) {
    oracle::Vec g(d * d, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < d; ++i) {
      g[i * d + i] = 1;
      for (std::size_t j = i + 1; j < d; ++j) g[i * d + j] = v[k++];
    }
    out.push_back(g);
  });
  return out;
}

// Burnside: orbits = average number of fixed vectors.
mpz_class burnside(const std::vector<oracle::Vec>& group, std::size_t d, std::int64_t m) {
  mpz_class fixed = 0;
  for (const auto& g : group)
    oracle::each_vector(d, m, [&](const oracle::Vec& x) {
      if (oracle::row_times(x, g, d, d, m) == x) ++fixed;
    });
  return fixed / static_cast<long>(group.size());
}

// Heisenberg group mod m: (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b').
// Classes = commuting pairs / |G|; the c coordinate plays no role.
mpz_class heisenberg_classes(std::int64_t m) {
  mpz_class commuting = 0;
  for (std::int64_t a = 0; a < m; ++a)
    for (std::int64_t b = 0; b < m; ++b)
      for (std::int64_t a2 = 0; a2 < m; ++a2)
        for (std::int64_t b2 = 0; b2 < m; ++b2)
          if ((a * b2 - a2 * b) % m == 0) ++commuting;
  return commuting * m * m / (m * m * m);
}

}  // namespace

TEST_CASE("exp and log are inverse") {
  const auto n3 = catalog_module("n(3)");
  const RingSpec ring(5, 2);
  for (const auto& a : n3.basis()) {
    const IntMatrix g = exp_nilpotent(a + a + a, ring);
    const IntMatrix back = log_unipotent(g, ring);
    for (std::size_t i = 0; i < 9; ++i) CHECK(oracle::mod(back.entries()[i] - 3 * a.entries()[i], 25) == 0);
  }
  CHECK_THROWS_AS(exp_nilpotent(IntMatrix{{1, 0}, {0, 0}}, ring), InputError);
  CHECK_THROWS_AS(exp_nilpotent(n3.basis()[0], RingSpec(2, 1)), InputError);
}

TEST_CASE("nilpotent algebra check") {
  CHECK_NOTHROW(check_nilpotent_algebra(catalog_module("n(4)")));
  CHECK_NOTHROW(check_nilpotent_algebra(catalog_module("L_{4,3}")));
  CHECK_THROWS_AS(check_nilpotent_algebra(catalog_module("so(3)")), InputError);
  CHECK_THROWS_AS(check_nilpotent_algebra(catalog_module("diag(2)")), InputError);
}

TEST_CASE("orbit counts against Burnside") {
  for (std::size_t d : {2, 3}) {
    const auto l = catalog_module("n(" + std::to_string(d) + ")");
    for (auto [p, n] : {std::pair{3L, 1}, {5L, 1}, {3L, 2}}) {
      const std::int64_t m = oracle::ipow(p, n);
      if (oracle::ipow(m, static_cast<int>(d * (d - 1) / 2 + d)) > 2000000) continue;
      const auto want = burnside(unitriangular(d, m), d, m);
      const auto got = oc_coefficients(exp_generators(l, RingSpec(p, n)), p, n);
      CHECK(got.back() == want);
      const auto bridge = oc_via_ask(l, p, n);
      CHECK(bridge.series.values.back().value == mpq_class(want));
    }
  }
}

TEST_CASE("small linear groups") {
  // GL_2 on (Z/3^n)^2: orbits are {0} and vectors of each valuation
  CHECK(oc_coefficients(gl_generators(2, 3), 3, 2) == std::vector<mpz_class>{1, 2, 3});
  const GroupGenSet minus{1, {IntMatrix{{-1}}}, "minus"};
  for (std::int64_t q : {5, 7}) CHECK(oc_coefficients(minus, q, 1)[1] == 1 + (q - 1) / 2);
  const GroupGenSet swap{2, {IntMatrix{{0, 1}, {1, 0}}}, "swap"};
  const auto s = oc_coefficients(swap, 3, 2);
  CHECK(s[1] == 6);
  CHECK(s[2] == 45);
}

TEST_CASE("conjugacy classes of the Heisenberg group") {
  const auto l = catalog_module("n(3)");
  for (auto [p, n] : {std::pair{3L, 1}, {5L, 1}, {3L, 2}}) {
    const auto want = heisenberg_classes(oracle::ipow(p, n));
    CHECK(cc_coefficients_direct(l, p, n).back() == want);
    CHECK(cc_via_ask(l, p, n).series.values.back().value == mpq_class(want));
  }
  CHECK(heisenberg_classes(5) == 29);
}

TEST_CASE("bridge warnings") {
  const auto l = catalog_module("n(4)");
  CHECK_FALSE(cc_via_ask(l, 3, 1).warnings.empty());
  CHECK(cc_via_ask(l, 5, 1).warnings.empty());
}

TEST_CASE("Lie algebras") {
  const auto h = graaf_algebra(3, 2);
  CHECK(h.satisfies_jacobi());
  CHECK(h.nilpotency_class() == 2);
  CHECK(graaf_algebra(3, 1).is_abelian());
  for (auto [d, i] : graaf_algebra_list()) CHECK(graaf_algebra(d, i).satisfies_jacobi());
  CHECK(graaf_algebra_list().size() == 1 + 1 + 2 + 3 + 9);
  CHECK(LieAlgebra::from_module(catalog_module("n(3)")).nilpotency_class() == 2);
  CHECK(LieAlgebra::from_module(catalog_module("n(4)")).nilpotency_class() == 3);
  CHECK_THROWS_AS(LieAlgebra::from_module(catalog_module("sym(2)")), InputError);
  // commutator is bilinear and antisymmetric
  const IntMatrix a{{0, 1}, {0, 0}}, b{{0, 0}, {1, 0}};
  CHECK(commutator(a, b) == IntMatrix{{1, 0}, {0, -1}});
  CHECK(commutator(b, a) == mpz_class(-1) * commutator(a, b));
}
