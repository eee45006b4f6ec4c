#include <doctest.h>

#include "askzeta/catalog.hpp"
#include "askzeta/error.hpp"
#include "askzeta/grouporbits.hpp"
#include "askzeta/json_io.hpp"

using namespace askzeta;

namespace {

std::string fixture(const char* name) { return std::string(ASKZETA_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("rationals") {
  const Json j = rational_to_json(mpq_class(-6, 4));
  CHECK(j["num"] == "-3");
  CHECK(j["den"] == "2");
  CHECK(rational_from_json(j) == mpq_class(-3, 2));
  CHECK(rational_from_json(Json{{"num", "4"}, {"den", "-8"}}) == mpq_class(-1, 2));
  CHECK_THROWS_AS(rational_from_json(Json{{"num", "1"}, {"den", "0"}}), InputError);
  CHECK_THROWS_AS(rational_from_json(Json{{"num", "x"}, {"den", "1"}}), InputError);
}

TEST_CASE("module fixtures round trip") {
  for (const char* name : {"so3.json", "heisenberg.json", "bigentries.json"}) {
    const Json j = read_json_file(fixture(name));
    const MatrixModule m = module_from_json(j);
    const Json out = module_to_json(m, json_is_lie(j));
    const MatrixModule again = module_from_json(Json::parse(out.dump()));
    CHECK(again == m);
    CHECK(module_to_json(again, json_is_lie(j)).dump() == out.dump());
    CHECK(out["schema"] == kSchema);
  }
  CHECK(module_from_json(read_json_file(fixture("so3.json"))) == catalog_module("so(3)"));
  CHECK(json_is_lie(read_json_file(fixture("heisenberg.json"))));
  const auto big = module_from_json(read_json_file(fixture("bigentries.json")));
  CHECK(big.dim() == 2);
}

TEST_CASE("group fixture round trip") {
  const GroupGenSet g = group_from_json(read_json_file(fixture("swap.json")));
  CHECK(g.d == 2);
  REQUIRE(g.generators.size() == 1);
  const GroupGenSet h = group_from_json(Json::parse(group_to_json(g).dump()));
  CHECK(h.generators == g.generators);
  CHECK(h.label == g.label);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(module_from_json(read_json_file(fixture("bad_shape.json"))), InputError);
  CHECK_THROWS_AS(read_json_file(fixture("missing.json")), InputError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"schema": "askzeta/9", "d": 1, "e": 1, "basis": []})")),
                  InputError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"({"d": -1, "e": 1, "basis": []})")), InputError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"([1, 2])")), InputError);
}
