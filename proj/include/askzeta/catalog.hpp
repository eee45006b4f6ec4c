#pragma once

#include <string>
#include <vector>

#include "askzeta/matmodule.hpp"

namespace askzeta {

/// Split "name(a,b)" into name and integer arguments; "L_{d,i}" is
/// returned as name "L" with arguments {d, i}.
struct CatalogKey {
  std::string name;
  std::vector<int> args;
};
CatalogKey parse_catalog_key(const std::string& key);

/// Standard Z-forms of the named families, e.g. "so(3)", "mat(2,3)",
/// "sp(4)", "band(2)", "ex_elliptic", "L_{4,3}".
MatrixModule catalog_module(const std::string& key);
MatrixModule catalog_module(const std::string& name, const std::vector<int>& args);

/// Family names accepted by catalog_module.
std::vector<std::string> catalog_module_names();

}  // namespace askzeta
