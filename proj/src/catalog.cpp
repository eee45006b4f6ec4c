#include "askzeta/catalog.hpp"

#include <cctype>
#include <regex>

#include "askzeta/error.hpp"

namespace askzeta {

namespace {

using Entry = std::tuple<int, int, long>;

IntMatrix sparse(std::size_t d, std::size_t e, std::initializer_list<Entry> entries) {
  IntMatrix a(d, e);
  for (auto [i, j, c] : entries) a(i - 1, j - 1) += c;
  return a;
}

IntMatrix e_ij(std::size_t d, std::size_t e, std::size_t i, std::size_t j) {
  return IntMatrix::unit(d, e, i, j);
}

void need(const std::string& name, const std::vector<int>& args, std::size_t count) {
  if (args.size() != count)
    throw InputError("catalog module '" + name + "' takes " + std::to_string(count) + " argument(s)");
  for (int a : args)
    if (a < 0) throw InputError("catalog module '" + name + "': negative dimension");
}

MatrixModule mat(std::size_t d, std::size_t e) {
  std::vector<IntMatrix> b;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < e; ++j) b.push_back(e_ij(d, e, i, j));
  return MatrixModule(d, e, std::move(b));
}

MatrixModule sl(std::size_t d) {
  std::vector<IntMatrix> b;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) b.push_back(e_ij(d, d, i, j));
  for (std::size_t i = 0; i + 1 < d; ++i) b.push_back(e_ij(d, d, i, i) - e_ij(d, d, i + 1, i + 1));
  return MatrixModule(d, d, std::move(b));
}

MatrixModule so(std::size_t d) {
  std::vector<IntMatrix> b;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) b.push_back(e_ij(d, d, i, j) - e_ij(d, d, j, i));
  return MatrixModule(d, d, std::move(b));
}

MatrixModule sym(std::size_t d) {
  std::vector<IntMatrix> b;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      b.push_back(i == j ? e_ij(d, d, i, i) : e_ij(d, d, i, j) + e_ij(d, d, j, i));
  return MatrixModule(d, d, std::move(b));
}

// [[A, B], [C, -A^T]] with B, C symmetric.
MatrixModule sp(std::size_t size) {
  if (size % 2) throw InputError("sp: matrix size must be even");
  const std::size_t h = size / 2, n = size;
  std::vector<IntMatrix> b;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) b.push_back(e_ij(n, n, i, j) - e_ij(n, n, h + j, h + i));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j) {
      b.push_back(i == j ? e_ij(n, n, i, h + i) : e_ij(n, n, i, h + j) + e_ij(n, n, j, h + i));
      b.push_back(i == j ? e_ij(n, n, h + i, i) : e_ij(n, n, h + i, j) + e_ij(n, n, h + j, i));
    }
  return MatrixModule(n, n, std::move(b));
}

MatrixModule triangular(std::size_t d, bool strict) {
  std::vector<IntMatrix> b;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = strict ? i + 1 : i; j < d; ++j) b.push_back(e_ij(d, d, i, j));
  return MatrixModule(d, d, std::move(b));
}

MatrixModule diag(std::size_t d) {
  std::vector<IntMatrix> b;
  for (std::size_t i = 0; i < d; ++i) b.push_back(e_ij(d, d, i, i));
  return MatrixModule(d, d, std::move(b));
}

// Column j carries x_1, ..., x_r in rows j, ..., j + r - 1.
MatrixModule band(std::size_t r) {
  if (r == 0) throw InputError("band: r must be positive");
  const std::size_t d = 2 * r - 1;
  std::vector<IntMatrix> b;
  for (std::size_t k = 0; k < r; ++k) {
    IntMatrix a(d, r);
    for (std::size_t j = 0; j < r; ++j) a(j + k, j) = 1;
    b.push_back(std::move(a));
  }
  return MatrixModule(d, r, std::move(b));
}

MatrixModule ex_unbounded() {
  return MatrixModule(3, 3,
                      {sparse(3, 3, {{1, 1, 1}, {1, 3, 1}, {3, 1, 1}}),
                       sparse(3, 3, {{1, 2, 1}, {2, 1, 1}}),
                       sparse(3, 3, {{2, 2, 1}, {3, 3, 1}}),
                       sparse(3, 3, {{2, 3, 1}, {3, 2, 1}})});
}

MatrixModule ex_elliptic() {
  return MatrixModule(3, 3,
                      {sparse(3, 3, {{1, 2, 1}, {2, 1, 1}, {3, 3, 1}}),
                       sparse(3, 3, {{1, 3, 1}, {3, 1, 1}}),
                       sparse(3, 3, {{1, 1, 1}, {2, 2, 1}})});
}

// Entries x_2/2 and x_3/2 cleared by x_2 -> 2 x_2, x_3 -> 2 x_3 (p odd).
MatrixModule ex_non_lie() {
  return MatrixModule(6, 6,
                      {sparse(6, 6, {{1, 6, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}}),
                       sparse(6, 6, {{1, 2, 2}, {2, 4, 1}, {5, 6, 2}}),
                       sparse(6, 6, {{1, 3, -2}, {2, 5, -1}, {4, 6, 2}}),
                       sparse(6, 6, {{3, 6, 1}}),
                       sparse(6, 6, {{2, 6, 1}})});
}

MatrixModule ex_l56() {
  return MatrixModule(5, 5,
                      {sparse(5, 5, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}}),
                       sparse(5, 5, {{1, 3, 1}, {4, 5, 2}}),
                       sparse(5, 5, {{1, 4, -1}, {3, 5, 2}}),
                       sparse(5, 5, {{2, 5, 1}}),
                       sparse(5, 5, {{1, 5, 1}})});
}

MatrixModule l43_in_n4() {
  return MatrixModule(4, 4,
                      {sparse(4, 4, {{1, 2, 1}, {2, 3, 1}}), sparse(4, 4, {{3, 4, 1}}),
                       sparse(4, 4, {{2, 4, 1}}), sparse(4, 4, {{1, 4, 1}})});
}

MatrixModule build(const std::string& name, const std::vector<int>& args) {
  auto arg = [&](std::size_t i) { return static_cast<std::size_t>(args[i]); };
  if (name == "mat" || name == "zero") {
    need(name, args, 2);
    return name == "mat" ? mat(arg(0), arg(1)) : MatrixModule(arg(0), arg(1), {});
  }
  if (name == "gl") return need(name, args, 1), mat(arg(0), arg(0));
  if (name == "sl") return need(name, args, 1), sl(arg(0));
  if (name == "so") return need(name, args, 1), so(arg(0));
  if (name == "sp") return need(name, args, 1), sp(arg(0));
  if (name == "sym") return need(name, args, 1), sym(arg(0));
  if (name == "n") return need(name, args, 1), triangular(arg(0), true);
  if (name == "tr") return need(name, args, 1), triangular(arg(0), false);
  if (name == "diag") return need(name, args, 1), diag(arg(0));
  if (name == "band") return need(name, args, 1), band(arg(0));
  if (name == "ex_unbounded") return need(name, args, 0), ex_unbounded();
  if (name == "ex_elliptic") return need(name, args, 0), ex_elliptic();
  if (name == "ex_non_lie") return need(name, args, 0), ex_non_lie();
  if (name == "ex_L56") return need(name, args, 0), ex_l56();
  if (name == "L") {
    need(name, args, 2);
    if (args[0] == 3 && args[1] == 2) return triangular(3, true);
    if (args[0] == 4 && args[1] == 3) return l43_in_n4();
    if (args[0] == 5 && args[1] == 6) return ex_l56();
    throw InputError("no matrix realization stored for L_{" + std::to_string(args[0]) + "," +
                     std::to_string(args[1]) + "}");
  }
  throw InputError("unknown catalog module '" + name + "'");
}

}  // namespace

CatalogKey parse_catalog_key(const std::string& key) {
  static const std::regex lie(R"(\s*L_?\{?\s*(\d+)\s*,\s*(\d+)\s*\}?\s*)");
  static const std::regex call(R"(\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\(([^)]*)\))?\s*)");
  std::smatch m;
  if (std::regex_match(key, m, lie)) return {"L", {std::stoi(m[1]), std::stoi(m[2])}};
  if (!std::regex_match(key, m, call)) throw InputError("malformed catalog key '" + key + "'");
  CatalogKey out{m[1], {}};
  const std::string inner = m[2];
  if (m[2].matched) {
    static const std::regex num(R"(\s*(-?\d+)\s*)");
    std::size_t start = 0;
    while (start <= inner.size()) {
      const auto comma = inner.find(',', start);
      const std::string piece = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      std::smatch nm;
      if (!std::regex_match(piece, nm, num)) throw InputError("malformed catalog key '" + key + "'");
      out.args.push_back(std::stoi(nm[1]));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

MatrixModule catalog_module(const std::string& name, const std::vector<int>& args) {
  MatrixModule m = build(name, args);
  std::string label = name == "L" ? "L_{" : name + (args.empty() ? "" : "(");
  for (std::size_t i = 0; i < args.size(); ++i) label += (i ? "," : "") + std::to_string(args[i]);
  if (!args.empty()) label += name == "L" ? "}" : ")";
  m.set_label(label);
  return m;
}

MatrixModule catalog_module(const std::string& key) {
  const auto k = parse_catalog_key(key);
  return catalog_module(k.name, k.args);
}

std::vector<std::string> catalog_module_names() {
  return {"mat(d,e)", "zero(d,e)", "gl(d)",        "sl(d)",       "so(d)",      "sp(2d)",
          "sym(d)",   "n(d)",      "tr(d)",        "diag(d)",     "band(r)",    "ex_unbounded",
          "ex_elliptic", "ex_non_lie", "ex_L56",   "L_{3,2}",     "L_{4,3}",    "L_{5,6}"};
}

}  // namespace askzeta
