#include "askzeta/json_io.hpp"

#include <fstream>

#include "askzeta/error.hpp"

namespace askzeta {

Json rational_to_json(const mpq_class& x) {
  mpq_class y = x;
  y.canonicalize();
  return Json{{"num", y.get_num().get_str()}, {"den", y.get_den().get_str()}};
}

namespace {

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InputError("schema: malformed integer string");
    return v;
  }
  throw InputError("schema: expected an integer");
}

Json matrix_to_json(const IntMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a(i, j);
      if (x.fits_slong_p())
        row.push_back(x.get_si());
      else
        row.push_back(x.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, std::size_t d, std::size_t e, const char* what) {
  if (!j.is_array() || j.size() != d) throw InputError(std::string("schema: ") + what + " must have d rows");
  IntMatrix a(d, e);
  for (std::size_t i = 0; i < d; ++i) {
    if (!j[i].is_array() || j[i].size() != e) throw InputError(std::string("schema: ") + what + " row has wrong length");
    for (std::size_t k = 0; k < e; ++k) a(i, k) = integer_from_json(j[i][k]);
  }
  return a;
}

void check_schema(const Json& j) {
  if (j.contains("schema") && j["schema"] != kSchema)
    throw InputError("schema: unsupported version " + j["schema"].dump());
}

std::size_t dim_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
    throw InputError(std::string("schema: field '") + key + "' must be a nonnegative integer");
  return j[key].get<std::size_t>();
}

}  // namespace

mpq_class rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw InputError("schema: rational needs num and den");
  mpq_class x(integer_from_json(j["num"]), integer_from_json(j["den"]));
  if (x.get_den() == 0) throw InputError("schema: zero denominator");
  x.canonicalize();
  return x;
}

Json module_to_json(const MatrixModule& m, bool lie) {
  Json basis = Json::array();
  for (const auto& a : m.basis()) basis.push_back(matrix_to_json(a));
  Json j{{"schema", kSchema}, {"d", m.d()}, {"e", m.e()}, {"basis", std::move(basis)}};
  if (!m.label().empty()) j["label"] = m.label();
  if (lie) j["lie"] = true;
  return j;
}

MatrixModule module_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("schema: module must be an object");
  check_schema(j);
  const std::size_t d = dim_field(j, "d"), e = dim_field(j, "e");
  if (!j.contains("basis") || !j["basis"].is_array()) throw InputError("schema: field 'basis' must be an array");
  std::vector<IntMatrix> basis;
  for (const auto& b : j["basis"]) basis.push_back(matrix_from_json(b, d, e, "basis element"));
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InputError("schema: label must be a string");
    label = j["label"].get<std::string>();
  }
  return MatrixModule(d, e, std::move(basis), label);
}

bool json_is_lie(const Json& j) { return j.is_object() && j.contains("lie") && j["lie"] == true; }

Json group_to_json(const GroupGenSet& g) {
  Json gens = Json::array();
  for (const auto& a : g.generators) gens.push_back(matrix_to_json(a));
  Json j{{"schema", kSchema}, {"d", g.d}, {"e", g.d}, {"basis", Json::array()}, {"generators", std::move(gens)}};
  if (!g.label.empty()) j["label"] = g.label;
  return j;
}

GroupGenSet group_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("schema: group must be an object");
  check_schema(j);
  GroupGenSet g;
  g.d = dim_field(j, "d");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InputError("schema: field 'generators' must be an array");
  for (const auto& a : j["generators"]) g.generators.push_back(matrix_from_json(a, g.d, g.d, "generator"));
  if (j.contains("label") && j["label"].is_string()) g.label = j["label"].get<std::string>();
  return g;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace askzeta
