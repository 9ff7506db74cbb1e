#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "curalg/algebra.hpp"

namespace curalg {

using Json = nlohmann::ordered_json;
using AnyAlgebra = std::variant<LieAlgebra, AssocAlgebra>;

/// Schema problem in an algebra file; `where` is a JSON-pointer-like location.
class AlgebraFormatError : public std::runtime_error {
 public:
  AlgebraFormatError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// File schema:
///   {"kind": "lie" | "assoc", "dim": n, "basis": ["x1", ...],
///    "table": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "p/q"}, ...]}, ...],
///    "unital": bool?, "degrees": [int, ...]?}
/// Indices are 1-based. Omitted pairs are zero; when (i, j) is listed and
/// (j, i) is not, the mirror entry is filled in by anticommutativity (Lie) or
/// commutativity (assoc). Lie files normally list only i < j.
AnyAlgebra algebra_from_json(const Json& doc);
AnyAlgebra parse_algebra_file(const std::filesystem::path& path);

Json to_json(const LieAlgebra& lie);
Json to_json(const AssocAlgebra& assoc);

}  // namespace curalg
