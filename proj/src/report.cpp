#include "curalg/report.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace curalg {

Json scalar_json(const Scalar& s) { return format_scalar(s); }

Json vector_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Json to_json(const CochainSpaceResult& r, const std::string& lie, const std::string& module) {
  return Json{{"L", lie},
              {"module", module},
              {"degree", r.degree},
              {"C", r.cochain_dim},
              {"Z", r.z_space.dim()},
              {"B", r.b_space.dim()},
              {"H", r.h_dim}};
}

Json to_json(const FormSpace& f, const std::string& algebra) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < f.dim(); ++i) basis.push_back(matrix_json(f.form(i)));
  return Json{{"algebra", algebra},
              {"condition", std::string(condition_name(f.condition))},
              {"symmetry", std::string(filter_name(f.symmetry))},
              {"dim", f.dim()},
              {"basis", std::move(basis)}};
}

Json to_json(const DecompositionReport& r) {
  const bool h2 = r.theorem == "h2";
  Json types = Json::object();
  for (const auto& t : r.types)
    types[t.name] = Json{{"L", t.lie_factor_dim}, {"A", t.assoc_factor_dim}, {"span", t.span.dim()}};
  Json dims = Json::object();
  dims[h2 ? "Z2" : "B"] = r.target.dim();
  dims["span"] = r.span.dim();
  dims["types"] = std::move(types);
  Json out{{"theorem", r.theorem}, {"L", r.lie}, {"A", r.assoc}, {"dims", std::move(dims)}};
  out[h2 ? "span_in_Z" : "span_in_B"] = r.span_in_target;
  out[h2 ? "Z_in_span" : "B_in_span"] = r.target_in_span;
  if (r.witness) out["witness"] = vector_json(*r.witness);
  return out;
}

Json to_json(const MapSpace& m, const std::string& algebra) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) basis.push_back(matrix_json(m.map(i)));
  return Json{{"algebra", algebra}, {"condition", m.condition}, {"dim", m.dim()}, {"basis", std::move(basis)}};
}

Json to_json(const PencilCandidates& p) {
  Json out{{"degenerate", p.degenerate}};
  if (p.degenerate) out["generic_dim"] = p.generic_dim;
  Json sols = Json::array();
  for (const auto& s : p.solutions) sols.push_back(Json{{"lambda", scalar_json(s.lambda)}, {"dim", s.space.dim()}});
  out["solutions"] = std::move(sols);
  out["irrational_locus_degree"] = p.irrational_locus_degree;
  out["exhaustive"] = p.exhaustive;
  if (p.projection_roots_agree) out["projection_roots_agree"] = *p.projection_roots_agree;
  return out;
}

namespace {

Json pencil_summary_json(const PencilSummary& s) {
  Json pairs = Json::array();
  for (const auto& p : s.pairs)
    pairs.push_back(Json{{"lambda", scalar_json(p.lambda)}, {"mu", scalar_json(1 / p.lambda)}, {"L", p.lie_dim},
                         {"A", p.assoc_dim}});
  return Json{{"L", to_json(s.lie)}, {"A", to_json(s.assoc)}, {"pairs", std::move(pairs)}, {"sampled", s.sampled}};
}

}  // namespace

Json to_json(const DerDecompositionReport& r) {
  Json types = Json::object();
  for (const auto& t : r.types)
    types[t.name] = Json{{"L", t.lie_factor_dim}, {"A", t.assoc_factor_dim}, {"span", t.span.dim()}};
  Json out{{"theorem", "der"},
           {"L", r.lie},
           {"A", r.assoc},
           {"types", std::move(types)},
           {"lambda", Json{{"i", pencil_summary_json(r.first_pencil)}, {"ii", pencil_summary_json(r.second_pencil)}}},
           {"der_dim", r.der.dim()},
           {"inner_dim", r.inner.dim()},
           {"span_dim", r.span.dim()},
           {"generators_are_derivations", r.generators_are_derivations},
           {"equal", r.span_in_der && r.der_in_span}};
  if (r.witness) out["witness"] = vector_json(*r.witness);
  return out;
}

Json to_json(const SequenceReport& r) {
  Json out{{"L", r.lie},
           {"dims",
            Json{{"H2", r.h2()},
                 {"H1_coadjoint", r.h1()},
                 {"B", r.b_forms},
                 {"H3", r.h3()},
                 {"Z2", r.z2},
                 {"B2", r.b2},
                 {"Z1", r.z1},
                 {"B1", r.b1},
                 {"Z3", r.z3},
                 {"B3", r.b3}}},
           {"maps", Json{{"im_u", r.im_u}, {"ker_v", r.ker_v}, {"im_v", r.im_v}, {"ker_w", r.ker_w}}},
           {"checks",
            Json{{"u_into_Z1", r.u_into_z1},
                 {"u_injective", r.u_injective},
                 {"v_into_B", r.v_into_b},
                 {"v_kills_B1", r.v_kills_b1},
                 {"vu_zero", r.vu_zero},
                 {"w_into_Z3", r.w_into_z3},
                 {"wv_zero", r.wv_zero},
                 {"w_injective", r.ker_w == 0}}},
           {"exact", Json{{"ker_v_eq_im_u", r.exact_at_h1}, {"im_v_eq_ker_w", r.exact_at_b}}}};
  if (r.transport)
    out["transport"] = Json{{"der_dim", r.transport->der_dim},
                            {"inner_dim", r.transport->inner_dim},
                            {"H1_adjoint", r.transport->h1_adjoint()},
                            {"der_onto_Z1", r.transport->der_onto_z1},
                            {"inner_onto_B1", r.transport->inner_onto_b1}};
  out["verdict"] = r.ok();
  return out;
}

Json to_json(const LoopDerivation& d) {
  Json out{{"order", d.order},
           {"dim", d.algebra.dim()},
           {"identity_holds", d.identity_holds},
           {"nondecomposable", d.nondecomposable}};
  if (d.minor) out["minor"] = Json{{"rows", {(*d.minor)[0], (*d.minor)[1]}}, {"cols", {(*d.minor)[2], (*d.minor)[3]}}};
  Json images = Json::object();
  const auto& labels = d.algebra.algebra().labels();
  for (std::size_t a = 0; a < d.algebra.dim(); ++a) {
    Json terms = Json::object();
    for (std::size_t b = 0; b < d.algebra.dim(); ++b)
      if (sgn(d.map(b, a)) != 0) terms[labels[b]] = scalar_json(d.map(b, a));
    images[labels[a]] = std::move(terms);
  }
  out["map"] = std::move(images);
  return out;
}

Json to_json(const LarssonReport& r) {
  Json degrees = Json::object();
  Json expected = Json::object();
  for (std::size_t i = 0; i < r.degrees.size(); ++i) {
    const auto& d = r.degrees[i];
    degrees[std::to_string(d.degree)] = Json{{"Z", d.z}, {"B", d.b}, {"H", d.h}};
    expected[std::to_string(d.degree)] = r.expected[i];
  }
  return Json{{"g", r.g},
              {"max_degree", r.max_degree},
              {"sl2_summands", r.sl2_summands},
              {"degrees", std::move(degrees)},
              {"expected", std::move(expected)},
              {"verdict", r.verdict},
              {"quadratic_presentation", r.quadratic_presentation}};
}

Json to_json(const BilinearForm& f) {
  return Json{{"symmetry", std::string(symmetry_name(f.symmetry))}, {"matrix", matrix_json(f.matrix)}};
}

namespace {

void flatten(const Json& node, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (node.is_array() && std::any_of(node.begin(), node.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else if (node.is_string()) {
    out.emplace_back(path, node.get<std::string>());
  } else {
    out.emplace_back(path, node.dump());
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

}  // namespace curalg
