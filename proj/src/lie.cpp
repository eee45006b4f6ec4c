#include "askzeta/lie.hpp"

#include <map>

#include "askzeta/error.hpp"

namespace askzeta {

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) { return a * b - b * a; }

LieAlgebra::LieAlgebra(std::size_t dim, std::string label)
    : dim_(dim), brackets_(dim * dim, IntVector(dim)), label_(std::move(label)) {}

LieAlgebra LieAlgebra::from_relations(std::size_t dim,
                                      const std::vector<std::tuple<int, int, int, long>>& rels,
                                      std::string label) {
  LieAlgebra l(dim, std::move(label));
  for (auto [i, j, k, c] : rels) {
    if (i < 0 || j < 0 || k < 0 || std::size_t(i) >= dim || std::size_t(j) >= dim ||
        std::size_t(k) >= dim || i == j)
      throw InputError("LieAlgebra: bad relation index");
    l.brackets_[i * dim + j][k] += c;
    l.brackets_[j * dim + i][k] -= c;
  }
  return l;
}

LieAlgebra LieAlgebra::from_module(const MatrixModule& m) {
  if (m.d() != m.e()) throw InputError("not a Lie algebra: matrices are not square");
  const std::size_t n = m.dim();
  LieAlgebra l(n, m.label());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto c = m.coordinates(commutator(m.basis()[i], m.basis()[j]));
      if (!c) throw InputError("not a Lie algebra: basis is not closed under commutators");
      for (std::size_t k = 0; k < n; ++k) {
        if ((*c)[k].get_den() != 1) throw InputError("non-integral structure constants");
        l.brackets_[i * n + j][k] = (*c)[k].get_num();
        l.brackets_[j * n + i][k] = -(*c)[k].get_num();
      }
    }
  return l;
}

namespace {

IntVector bracket_vec(const LieAlgebra& l, const IntVector& a, const IntVector& b) {
  IntVector out(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (b[j] == 0) continue;
      const auto& c = l.bracket(i, j);
      for (std::size_t k = 0; k < l.dim(); ++k)
        if (c[k] != 0) out[k] += a[i] * b[j] * c[k];
    }
  }
  return out;
}

IntVector unit_vec(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

bool LieAlgebra::satisfies_jacobi() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const auto x = unit_vec(dim_, i), y = unit_vec(dim_, j), z = unit_vec(dim_, k);
        auto s = bracket_vec(*this, x, bracket_vec(*this, y, z));
        const auto t = bracket_vec(*this, y, bracket_vec(*this, z, x));
        const auto u = bracket_vec(*this, z, bracket_vec(*this, x, y));
        for (std::size_t r = 0; r < dim_; ++r)
          if (s[r] + t[r] + u[r] != 0) return false;
      }
  return true;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : brackets_)
    for (const auto& x : v)
      if (x != 0) return false;
  return true;
}

int LieAlgebra::nilpotency_class() const {
  if (dim_ == 0) return 0;
  std::vector<IntVector> current;
  for (std::size_t i = 0; i < dim_; ++i) current.push_back(unit_vec(dim_, i));
  for (int c = 1;; ++c) {
    std::vector<IntVector> next;
    for (const auto& v : current)
      for (std::size_t i = 0; i < dim_; ++i) next.push_back(bracket_vec(*this, unit_vec(dim_, i), v));
    auto h = hermite_normal_form(std::move(next), dim_);
    if (h.rows.empty()) return c;
    if (h.rows.size() == current.size()) throw InputError("Lie algebra is not nilpotent");
    current = std::move(h.rows);
  }
}

IntMatrix LieAlgebra::ad_matrix(std::size_t i) const {
  IntMatrix a(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) a(j, k) = bracket(j, i)[k];
  return a;
}

MatrixModule LieAlgebra::ad_module() const {
  std::vector<IntMatrix> basis;
  for (std::size_t i = 0; i < dim_; ++i) basis.push_back(ad_matrix(i));
  return MatrixModule(dim_, dim_, std::move(basis), label_.empty() ? "" : "ad(" + label_ + ")");
}

MatrixModule ad_representation(const MatrixModule& l) { return LieAlgebra::from_module(l).ad_module(); }

namespace {

using Rel = std::tuple<int, int, int, long>;

const std::map<std::pair<int, int>, std::vector<Rel>>& graaf_table() {
  // Relations [x_a, x_b] = x_c written 1-indexed.
  static const std::map<std::pair<int, int>, std::vector<Rel>> table = {
      {{1, 1}, {}},
      {{2, 1}, {}},
      {{3, 1}, {}},
      {{3, 2}, {{1, 2, 3, 1}}},
      {{4, 1}, {}},
      {{4, 2}, {{1, 2, 3, 1}}},
      {{4, 3}, {{1, 2, 3, 1}, {1, 3, 4, 1}}},
      {{5, 1}, {}},
      {{5, 2}, {{1, 2, 3, 1}}},
      {{5, 3}, {{1, 2, 3, 1}, {1, 3, 4, 1}}},
      {{5, 4}, {{1, 2, 5, 1}, {3, 4, 5, 1}}},
      {{5, 5}, {{1, 2, 3, 1}, {1, 3, 5, 1}, {2, 4, 5, 1}}},
      {{5, 6}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}}},
      {{5, 7}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}}},
      {{5, 8}, {{1, 2, 4, 1}, {1, 3, 5, 1}}},
      {{5, 9}, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 5, 1}}},
  };
  return table;
}

}  // namespace

LieAlgebra graaf_algebra(int d, int i) {
  const auto& t = graaf_table();
  auto it = t.find({d, i});
  if (it == t.end())
    throw InputError("no structure constants stored for L_{" + std::to_string(d) + "," +
                     std::to_string(i) + "}");
  std::vector<Rel> rels;
  for (auto [a, b, c, k] : it->second) rels.emplace_back(a - 1, b - 1, c - 1, k);
  return LieAlgebra::from_relations(static_cast<std::size_t>(d), rels,
                                    "L_{" + std::to_string(d) + "," + std::to_string(i) + "}");
}

std::vector<std::pair<int, int>> graaf_algebra_list() {
  std::vector<std::pair<int, int>> out;
  for (const auto& [k, v] : graaf_table()) out.push_back(k);
  return out;
}

}  // namespace askzeta
