#pragma once

#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "askzeta/grouporbits.hpp"
#include "askzeta/matmodule.hpp"

namespace askzeta {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "askzeta/1";

/// {"num": "...", "den": "..."} in lowest terms with den > 0.
Json rational_to_json(const mpq_class& x);
mpq_class rational_from_json(const Json& j);

/// {"d", "e", "basis": [[[...]]], "label"?, "lie"?}
Json module_to_json(const MatrixModule& m, bool lie = false);
MatrixModule module_from_json(const Json& j);
bool json_is_lie(const Json& j);

/// Module schema plus {"generators": [...]} of d x d matrices.
Json group_to_json(const GroupGenSet& g);
GroupGenSet group_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace askzeta
