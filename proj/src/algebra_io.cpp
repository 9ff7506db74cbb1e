#include "curalg/algebra_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace curalg {

namespace {

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw AlgebraFormatError(where, std::string("missing key '") + key + "'");
  return obj.at(key);
}

std::size_t index_field(const Json& obj, const char* key, std::size_t dim, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw AlgebraFormatError(where + "/" + key, "expected an integer");
  const auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim)
    throw AlgebraFormatError(where + "/" + key, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i - 1);
}

Scalar coefficient_field(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(v.get<long>());
  } catch (const std::invalid_argument& e) {
    throw AlgebraFormatError(where, e.what());
  }
  throw AlgebraFormatError(where, "coefficient must be a \"p/q\" string or an integer");
}

Json table_json(const StructureTable& t, bool upper_only) {
  Json table = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = upper_only ? i + 1 : i; j < t.dim(); ++j) {
      if (t.product(i, j).empty()) continue;
      Json terms = Json::array();
      for (const auto& term : t.product(i, j))
        terms.push_back({{"k", term.index + 1}, {"c", format_scalar(term.coeff)}});
      table.push_back({{"i", i + 1}, {"j", j + 1}, {"terms", std::move(terms)}});
    }
  return table;
}

}  // namespace

AnyAlgebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) throw AlgebraFormatError("", "top level must be an object");
  const Json& kind_v = require(doc, "kind", "");
  if (!kind_v.is_string()) throw AlgebraFormatError("/kind", "expected a string");
  const auto kind = kind_v.get<std::string>();
  if (kind != "lie" && kind != "assoc") throw AlgebraFormatError("/kind", "expected \"lie\" or \"assoc\"");
  const bool lie = kind == "lie";

  const Json& dim_v = require(doc, "dim", "");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() < 0)
    throw AlgebraFormatError("/dim", "expected a non-negative integer");
  const auto dim = static_cast<std::size_t>(dim_v.get<long long>());

  const Json& basis_v = require(doc, "basis", "");
  if (!basis_v.is_array() || basis_v.size() != dim)
    throw AlgebraFormatError("/basis", "expected an array of " + std::to_string(dim) + " labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!basis_v[i].is_string()) throw AlgebraFormatError("/basis/" + std::to_string(i), "expected a string");
    labels.push_back(basis_v[i].get<std::string>());
  }

  const Json& table_v = require(doc, "table", "");
  if (!table_v.is_array()) throw AlgebraFormatError("/table", "expected an array");
  std::map<std::pair<std::size_t, std::size_t>, Vector> entries;
  for (std::size_t e = 0; e < table_v.size(); ++e) {
    const std::string where = "/table/" + std::to_string(e);
    const Json& entry = table_v[e];
    const auto i = index_field(entry, "i", dim, where);
    const auto j = index_field(entry, "j", dim, where);
    if (entries.contains({i, j}))
      throw AlgebraFormatError(where, "duplicate entry for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    const Json& terms = require(entry, "terms", where);
    if (!terms.is_array()) throw AlgebraFormatError(where + "/terms", "expected an array");
    Vector coords(dim);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = where + "/terms/" + std::to_string(t);
      const auto k = index_field(terms[t], "k", dim, tw);
      coords[k] += coefficient_field(require(terms[t], "c", tw), tw + "/c");
    }
    entries.emplace(std::make_pair(i, j), std::move(coords));
  }

  StructureTable table(dim);
  for (const auto& [key, coords] : entries) {
    table.set(key.first, key.second, coords);
    const std::pair<std::size_t, std::size_t> mirror{key.second, key.first};
    if (mirror != key && !entries.contains(mirror)) {
      Vector m = coords;
      if (lie)
        for (auto& x : m) x = -x;
      table.set(mirror.first, mirror.second, m);
    }
  }

  if (lie) {
    if (doc.contains("unital") || doc.contains("degrees"))
      throw AlgebraFormatError("", "'unital'/'degrees' only apply to kind \"assoc\"");
    return LieAlgebra(std::move(labels), std::move(table));
  }

  bool unital = false;
  if (doc.contains("unital")) {
    if (!doc["unital"].is_boolean()) throw AlgebraFormatError("/unital", "expected a boolean");
    unital = doc["unital"].get<bool>();
  }
  std::optional<std::vector<int>> degrees;
  if (doc.contains("degrees")) {
    const Json& d = doc["degrees"];
    if (!d.is_array() || d.size() != dim) throw AlgebraFormatError("/degrees", "expected " + std::to_string(dim) + " integers");
    std::vector<int> deg;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!d[i].is_number_integer()) throw AlgebraFormatError("/degrees/" + std::to_string(i), "expected an integer");
      deg.push_back(d[i].get<int>());
    }
    degrees = std::move(deg);
  }
  return AssocAlgebra(std::move(labels), std::move(table), unital, std::move(degrees));
}

AnyAlgebra parse_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraFormatError(path.string(), "cannot open file (not a catalog name either)");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw AlgebraFormatError(path.string(), std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

Json to_json(const LieAlgebra& lie) {
  return {{"kind", "lie"}, {"dim", lie.dim()}, {"basis", lie.labels()}, {"table", table_json(lie.table(), true)}};
}

Json to_json(const AssocAlgebra& assoc) {
  Json doc = {{"kind", "assoc"},
              {"dim", assoc.dim()},
              {"basis", assoc.labels()},
              {"table", table_json(assoc.table(), false)},
              {"unital", assoc.unital()}};
  if (assoc.degrees()) doc["degrees"] = *assoc.degrees();
  return doc;
}

}  // namespace curalg
