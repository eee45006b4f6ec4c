#include <doctest.h>

#include "askzeta/catalog.hpp"
#include "askzeta/error.hpp"
#include "askzeta/matmodule.hpp"

using namespace askzeta;

TEST_CASE("canonical basis does not depend on the spanning set") {
  const IntMatrix a{{1, 2}, {0, 1}}, b{{0, 1}, {1, 0}};
  const MatrixModule m1(2, 2, {a, b});
  const MatrixModule m2(2, 2, {a + b, b, a - b, a + b + b});
  CHECK(m1 == m2);
  CHECK(m1.dim() == 2);
  const MatrixModule m3(2, 2, {a, 2 * b});
  CHECK_FALSE(m1 == m3);
  CHECK(m3.contains(a));
  CHECK_FALSE(m3.contains(b));
  const auto c = m3.coordinates(b);
  REQUIRE(c);
  bool half = false;
  for (const auto& x : *c) half = half || x.get_den() == 2;
  CHECK(half);
  CHECK_THROWS_AS(m3.element({}), InputError);
  CHECK_FALSE(m1.coordinates(IntMatrix{{1, 0}, {0, 0}}));
}

TEST_CASE("elements from coordinates") {
  const auto m = catalog_module("so(3)");
  CHECK(m.dim() == 3);
  std::vector<mpz_class> c{2, -1, 3};
  const IntMatrix x = m.element(c);
  CHECK(x.transposed() == mpz_class(-1) * x);
  const auto back = m.coordinates(x);
  REQUIRE(back);
  for (std::size_t i = 0; i < 3; ++i) CHECK((*back)[i] == c[i]);
}

TEST_CASE("bad shapes are rejected") {
  CHECK_THROWS_AS(MatrixModule(2, 2, {IntMatrix{{1, 2, 3}}}), InputError);
  CHECK_THROWS_AS(catalog_module("sp(3)"), InputError);
  CHECK_THROWS_AS(catalog_module("nonsense(2)"), InputError);
  CHECK_THROWS_AS(catalog_module("mat(2"), InputError);
}

TEST_CASE("catalog dimensions") {
  CHECK(catalog_module("mat(2,3)").dim() == 6);
  CHECK(catalog_module("gl(3)").dim() == 9);
  CHECK(catalog_module("sl(3)").dim() == 8);
  CHECK(catalog_module("so(4)").dim() == 6);
  CHECK(catalog_module("sym(3)").dim() == 6);
  CHECK(catalog_module("sp(4)").dim() == 10);
  CHECK(catalog_module("n(4)").dim() == 6);
  CHECK(catalog_module("tr(3)").dim() == 6);
  CHECK(catalog_module("diag(3)").dim() == 3);
  CHECK(catalog_module("band(3)").d() == 5);
  CHECK(catalog_module("band(3)").e() == 3);
  CHECK(catalog_module("zero(2,3)").dim() == 0);
  CHECK(catalog_module("L_{4,3}").dim() == 4);
}

TEST_CASE("generic ranks") {
  // so(3): a generic skew matrix has rank 2; orbits of a nonzero x have dimension 2
  const auto so3 = catalog_module("so(3)");
  CHECK(generic_element_rank(so3) == 2);
  CHECK(generic_orbit_rank(so3) == 2);
  const auto n3 = catalog_module("n(3)");
  CHECK(generic_element_rank(n3) == 2);
  CHECK(generic_orbit_rank(n3) == 2);
  CHECK(generic_element_rank(catalog_module("diag(3)")) == 3);
  CHECK(generic_orbit_rank(catalog_module("diag(3)")) == 3);
  CHECK(generic_element_rank(catalog_module("band(2)")) == 2);
  CHECK(generic_element_rank(catalog_module("zero(2,2)")) == 0);
}

TEST_CASE("linear form matrices") {
  const auto m = catalog_module("diag(2)");
  const auto g = generic_element(m);
  CHECK(g.nvars() == 2);
  std::vector<mpz_class> pt{4, 7};
  CHECK(g.evaluate(pt) == IntMatrix{{4, 0}, {0, 7}});
  const auto c = orbit_matrix(m);
  CHECK(c.rows() == 2);
  CHECK(c.cols() == 2);
  CHECK(c.evaluate(pt) == IntMatrix{{4, 0}, {0, 7}});
}

TEST_CASE("transforms") {
  const auto m = catalog_module("n(3)");
  const auto t = transform_transpose(m);
  CHECK(t.dim() == 3);
  CHECK(transform_transpose(t) == m);
  const auto r = transform_add_zero_row(m, 1);
  CHECK(r.d() == 4);
  CHECK(r.dim() == 3);
  for (const auto& b : r.basis())
    for (std::size_t j = 0; j < 3; ++j) CHECK(b(1, j) == 0);
  const auto c = transform_add_zero_col(m, 0);
  CHECK(c.e() == 4);
  const auto s = transform_direct_sum(m, catalog_module("mat(1,2)"));
  CHECK(s.d() == 4);
  CHECK(s.e() == 5);
  CHECK(s.dim() == 5);
  const auto sc = transform_rescale(m, 2, 3);
  for (const auto& b : sc.basis())
    for (const auto& x : b.entries()) CHECK(x % 9 == 0);
}

TEST_CASE("isolated primes") {
  CHECK(non_isolated_primes(catalog_module("so(3)")).empty());
  const MatrixModule m(2, 2, {IntMatrix{{6, 0}, {0, 0}}, IntMatrix{{0, 1}, {0, 0}}});
  CHECK(non_isolated_primes(m) == std::vector<std::int64_t>{2, 3});
  CHECK_FALSE(is_isolated_at(m, 3));
  CHECK(is_isolated_at(m, 5));
}
