#include "curalg/forms.hpp"

#include <array>
#include <stdexcept>

#include "curalg/cochain.hpp"
#include "curalg/parallel.hpp"

namespace curalg {

namespace {

enum class Kind { lie, assoc };

// Adds coeff * f(xy, z) to the row; the product xy expands over its terms.
void add_left(RowBuilder& row, const StructureTable& t, std::size_t x, std::size_t y, std::size_t z,
              const Scalar& coeff) {
  const std::size_t n = t.dim();
  for (const auto& term : t.product(x, y)) row.add(term.index * n + z, coeff * term.coeff);
}

// Adds coeff * f(z, xy).
void add_right(RowBuilder& row, const StructureTable& t, std::size_t z, std::size_t x, std::size_t y,
               const Scalar& coeff) {
  const std::size_t n = t.dim();
  for (const auto& term : t.product(x, y)) row.add(z * n + term.index, coeff * term.coeff);
}

void emit_condition_rows(const StructureTable& t, Kind kind, FormCondition cond, std::size_t x,
                         std::vector<SparseRow>& out) {
  const std::size_t n = t.dim();
  const Scalar one(1), minus_one(-1);
  RowBuilder row;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      switch (cond) {
        case FormCondition::any: return;
        case FormCondition::jacobi_sum_zero:
          add_left(row, t, x, y, z, one);
          add_left(row, t, z, x, y, one);
          add_left(row, t, y, z, x, one);
          out.push_back(row.take());
          break;
        case FormCondition::cyclic:
          add_left(row, t, x, y, z, one);
          add_left(row, t, z, x, y, minus_one);
          out.push_back(row.take());
          break;
        case FormCondition::radical:
          add_left(row, t, x, y, z, one);
          out.push_back(row.take());
          add_right(row, t, z, x, y, one);
          out.push_back(row.take());
          break;
        case FormCondition::invariant:
          add_left(row, t, x, y, z, one);
          if (kind == Kind::lie) {
            add_right(row, t, y, x, z, one);  // f(y, [x,z])
          } else {
            add_right(row, t, x, y, z, minus_one);  // -f(a, bc) with (a,b,c) = (x,y,z)
          }
          out.push_back(row.take());
          break;
      }
    }
}

void add_symmetry_rows(LinearSystem& system, std::size_t n, SymmetryFilter sym) {
  if (sym == SymmetryFilter::any) return;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      RowBuilder row;
      if (sym == SymmetryFilter::symmetric) {
        if (a == b) continue;
        row.add(a * n + b, Scalar(1));
        row.add(b * n + a, Scalar(-1));
      } else {
        row.add(a * n + b, Scalar(1));
        row.add(b * n + a, Scalar(1));
      }
      system.add(row.take());
    }
}

FormSpace solve_condition(const StructureTable& t, Kind kind, FormCondition cond, SymmetryFilter sym) {
  const std::size_t n = t.dim();
  LinearSystem system(n * n);
  auto rows = parallel_rows(n, [&](std::size_t x, std::vector<SparseRow>& out) {
    emit_condition_rows(t, kind, cond, x, out);
  });
  for (auto& r : rows) system.add(std::move(r));
  add_symmetry_rows(system, n, sym);
  return FormSpace{n, cond, sym, system.solve()};
}

bool check_condition(const StructureTable& t, Kind kind, FormCondition cond, const Matrix& form) {
  const std::size_t n = t.dim();
  if (form.rows() != n || form.cols() != n) throw std::invalid_argument("form size does not match algebra");
  Vector flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = form(a, b);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<SparseRow> rows;
    emit_condition_rows(t, kind, cond, x, rows);
    for (const auto& r : rows) {
      Scalar s = 0;
      for (const auto& e : r) s += e.value * flat[e.col];
      if (sgn(s) != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view condition_name(FormCondition c) {
  switch (c) {
    case FormCondition::any: return "any";
    case FormCondition::jacobi_sum_zero: return "jacobi_sum_zero";
    case FormCondition::cyclic: return "cyclic";
    case FormCondition::radical: return "radical";
    case FormCondition::invariant: return "invariant";
  }
  return "any";
}

std::string_view filter_name(SymmetryFilter s) {
  switch (s) {
    case SymmetryFilter::any: return "any";
    case SymmetryFilter::symmetric: return "symmetric";
    case SymmetryFilter::skew: return "skew";
  }
  return "any";
}

FormCondition parse_form_condition(std::string_view name) {
  for (auto c : {FormCondition::any, FormCondition::jacobi_sum_zero, FormCondition::cyclic, FormCondition::radical,
                 FormCondition::invariant})
    if (condition_name(c) == name) return c;
  if (name == "sum_zero" || name == "sum-zero") return FormCondition::jacobi_sum_zero;
  throw std::invalid_argument("unknown form condition '" + std::string(name) + "'");
}

SymmetryFilter parse_symmetry_filter(std::string_view name) {
  for (auto s : {SymmetryFilter::any, SymmetryFilter::symmetric, SymmetryFilter::skew})
    if (filter_name(s) == name) return s;
  throw std::invalid_argument("unknown symmetry filter '" + std::string(name) + "'");
}

Matrix FormSpace::form(std::size_t i) const {
  Matrix m(algebra_dim, algebra_dim);
  const auto row = space.basis().row(i);
  for (std::size_t a = 0; a < algebra_dim; ++a)
    for (std::size_t b = 0; b < algebra_dim; ++b) m(a, b) = row[a * algebra_dim + b];
  return m;
}

FormSpace condition_space(const LieAlgebra& lie, FormCondition cond, SymmetryFilter sym) {
  return solve_condition(lie.table(), Kind::lie, cond, sym);
}

FormSpace condition_space(const AssocAlgebra& assoc, FormCondition cond, SymmetryFilter sym) {
  return solve_condition(assoc.table(), Kind::assoc, cond, sym);
}

FormSpace invariant_symmetric_forms(const LieAlgebra& lie) {
  return condition_space(lie, FormCondition::invariant, SymmetryFilter::symmetric);
}

FormSpace hc1_space(const AssocAlgebra& assoc) {
  return condition_space(assoc, FormCondition::jacobi_sum_zero, SymmetryFilter::skew);
}

bool satisfies(const LieAlgebra& lie, FormCondition cond, const Matrix& form) {
  return check_condition(lie.table(), Kind::lie, cond, form);
}

bool satisfies(const AssocAlgebra& assoc, FormCondition cond, const Matrix& form) {
  return check_condition(assoc.table(), Kind::assoc, cond, form);
}

Subspace tensor_form_span(const FormSpace& lie_forms, const FormSpace& assoc_forms, const CurrentAlgebra& c) {
  const std::size_t nl = lie_forms.algebra_dim;
  const std::size_t na = assoc_forms.algebra_dim;
  if (nl != c.lie_factor().dim() || na != c.assoc_factor().dim())
    throw std::invalid_argument("form spaces do not match the factors of the current algebra");
  const std::size_t n = c.dim();
  EchelonBuilder builder(n * n);
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < lie_forms.dim(); ++f) {
    const auto phi = lie_forms.space.basis().row(f);
    for (std::size_t g = 0; g < assoc_forms.dim(); ++g) {
      const auto alpha = assoc_forms.space.basis().row(g);
      Vector v(n * n);
      for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t j = 0; j < nl; ++j) {
          const Scalar& p = phi[i * nl + j];
          if (sgn(p) == 0) continue;
          for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < na; ++b) {
              const Scalar& q = alpha[a * na + b];
              if (sgn(q) == 0) continue;
              v[c.index(i, a) * n + c.index(j, b)] = p * q;
            }
        }
      gens.push_back(std::move(v));
    }
  }
  for (auto& g : gens) builder.add(std::move(g));
  return Subspace::from_echelon(builder.finish(), n * n);
}

Subspace cocycle_forms(const LieAlgebra& lie) {
  const auto trivial = module_build(LieModule::Kind::trivial, lie);
  return skew_forms_from_cochains(ce_cocycle_system(lie, trivial, 2).solve(), lie.dim());
}

Subspace coboundary_forms(const LieAlgebra& lie) {
  const auto trivial = module_build(LieModule::Kind::trivial, lie);
  const Matrix d1 = ce_differential(lie, trivial, 1);
  return skew_forms_from_cochains(Subspace::span(d1.transpose()), lie.dim());
}

namespace {

struct TypeRecipe {
  std::string name;
  FormCondition lie_cond;
  SymmetryFilter lie_sym;
  FormCondition assoc_cond;
  SymmetryFilter assoc_sym;
};

void run_types(DecompositionReport& report, const CurrentAlgebra& c, const std::vector<TypeRecipe>& recipes) {
  std::vector<Subspace> parts;
  for (const auto& r : recipes) {
    const auto fl = condition_space(c.lie_factor(), r.lie_cond, r.lie_sym);
    const auto fa = condition_space(c.assoc_factor(), r.assoc_cond, r.assoc_sym);
    auto span = tensor_form_span(fl, fa, c);
    parts.push_back(span);
    report.types.push_back(TypeSpan{r.name, fl.dim(), fa.dim(), std::move(span)});
  }
  const std::size_t ambient = c.dim() * c.dim();
  report.span = subspace_sum(parts, ambient);

  report.span_in_target = true;
  for (const auto& t : report.types)
    if (!report.target.contains(t.span)) {
      report.span_in_target = false;
      for (std::size_t i = 0; i < t.span.dim(); ++i)
        if (!report.target.contains(t.span.basis().row(i))) {
          report.witness = t.span.basis_vector(i);
          break;
        }
      break;
    }
  report.target_in_span = true;
  for (std::size_t i = 0; i < report.target.dim(); ++i)
    if (!report.span.contains(report.target.basis().row(i))) {
      report.target_in_span = false;
      if (!report.witness) report.witness = report.target.basis_vector(i);
      break;
    }
}

}  // namespace

DecompositionReport verify_h2_decomposition(const LieAlgebra& lie, const AssocAlgebra& assoc) {
  const auto c = current(lie, assoc);
  DecompositionReport report;
  report.theorem = "h2";
  report.lie = lie.name();
  report.assoc = assoc.name();
  report.target = cocycle_forms(c.algebra());
  using FC = FormCondition;
  using SF = SymmetryFilter;
  std::vector<TypeRecipe> recipes;
  const std::array<std::pair<SF, SF>, 2> splits{{{SF::skew, SF::symmetric}, {SF::symmetric, SF::skew}}};
  const std::array<std::tuple<const char*, FC, FC>, 4> kinds{{{"i", FC::jacobi_sum_zero, FC::cyclic},
                                                              {"ii", FC::cyclic, FC::jacobi_sum_zero},
                                                              {"iii", FC::radical, FC::any},
                                                              {"iv", FC::any, FC::radical}}};
  for (const auto& [name, lc, ac] : kinds)
    for (const auto& [ls, as] : splits)
      recipes.push_back({std::string(name) + "." + (ls == SF::skew ? "skew_sym" : "sym_skew"), lc, ls, ac, as});
  run_types(report, c, recipes);
  return report;
}

DecompositionReport verify_forms_decomposition(const LieAlgebra& lie, const AssocAlgebra& assoc) {
  const auto c = current(lie, assoc);
  DecompositionReport report;
  report.theorem = "forms";
  report.lie = lie.name();
  report.assoc = assoc.name();
  report.target = invariant_symmetric_forms(c.algebra()).space;
  using FC = FormCondition;
  using SF = SymmetryFilter;
  std::vector<TypeRecipe> recipes;
  const std::array<std::tuple<const char*, FC, FC>, 3> kinds{
      {{"i", FC::cyclic, FC::cyclic}, {"ii", FC::radical, FC::any}, {"iii", FC::any, FC::radical}}};
  for (const auto& [name, lc, ac] : kinds)
    for (SF s : {SF::symmetric, SF::skew})
      recipes.push_back({std::string(name) + "." + (s == SF::symmetric ? "sym_sym" : "skew_skew"), lc, s, ac, s});
  run_types(report, c, recipes);
  return report;
}

CoboundarySummandCheck coboundary_summand_check(const LieAlgebra& lie, const AssocAlgebra& assoc) {
  const auto c = current(lie, assoc);
  const auto b2 = coboundary_forms(c.algebra());
  using FC = FormCondition;
  using SF = SymmetryFilter;
  const auto skew_sym = tensor_form_span(condition_space(lie, FC::any, SF::skew),
                                         condition_space(assoc, FC::any, SF::symmetric), c);
  const auto sym_skew = tensor_form_span(condition_space(lie, FC::any, SF::symmetric),
                                         condition_space(assoc, FC::any, SF::skew), c);
  return {b2.dim(), skew_sym.contains(b2), sym_skew.contains(b2)};
}

}  // namespace curalg
