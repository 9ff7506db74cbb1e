#include "curalg/graded.hpp"

#include <stdexcept>
#include <unordered_map>

#include "curalg/catalog.hpp"
#include "curalg/cochain.hpp"

namespace curalg {

Vector GradedCocycles::form(std::span<const Scalar> local) const {
  const std::size_t n = algebra.dim();
  const CochainIndex pairs(n, 2);
  Vector out(n * n);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const auto t = pairs.tuple(columns[i]);
    out[t[0] * n + t[1]] = local[i];
    out[t[1] * n + t[0]] = -local[i];
  }
  return out;
}

GradedCocycles graded_cocycles(const LieAlgebra& g, std::size_t d, std::optional<std::size_t> order) {
  if (d < 2) throw std::invalid_argument("graded degree must be at least 2");
  const std::size_t n_order = order.value_or(d + 1);
  if (n_order <= d) throw std::invalid_argument("truncation order must exceed the degree");
  GradedCocycles out{d, n_order, current(g, catalog::truncated_poly(n_order, false)), {}, {}, {}};
  const auto& c = out.algebra;
  const auto& deg = *c.degrees();
  const std::size_t n = c.dim();
  const int target = static_cast<int>(d);

  const CochainIndex pairs(n, 2);
  std::unordered_map<std::uint32_t, std::uint32_t> local;
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto t = pairs.tuple(r);
    if (deg[t[0]] + deg[t[1]] == target) {
      local.emplace(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(out.columns.size()));
      out.columns.push_back(static_cast<std::uint32_t>(r));
    }
  }

  const auto trivial = module_build(LieModule::Kind::trivial, c.algebra());
  LinearSystem system(out.columns.size());
  std::array<std::uint32_t, 3> t{};
  for (t[0] = 0; t[0] < n; ++t[0])
    for (t[1] = t[0] + 1; t[1] < n; ++t[1]) {
      const int partial = deg[t[0]] + deg[t[1]];
      if (partial >= target) continue;
      for (t[2] = t[1] + 1; t[2] < n; ++t[2]) {
        if (partial + deg[t[2]] != target) continue;
        RowBuilder row;
        for (const auto& e : ce_differential_row(c.algebra(), trivial, pairs, t, 0)) {
          const auto it = local.find(e.col);
          if (it == local.end()) throw std::logic_error("differential left the degree slice");
          row.add(it->second, e.value);
        }
        system.add(row.take());
      }
    }
  out.z = system.solve();

  std::vector<Vector> gens;
  for (std::size_t e = 0; e < n; ++e) {
    if (deg[e] != target) continue;
    Vector v(out.columns.size());
    for (std::size_t i = 0; i < out.columns.size(); ++i) {
      const auto p = pairs.tuple(out.columns[i]);
      for (const auto& term : c.algebra().bracket(p[0], p[1]))
        if (term.index == e) v[i] = -term.coeff;
    }
    gens.push_back(std::move(v));
  }
  out.b = Subspace::span(gens, out.columns.size());
  if (!out.z.contains(out.b)) throw std::logic_error("graded coboundaries are not cocycles");
  return out;
}

GradedDims graded_h2(const LieAlgebra& g, std::size_t d, std::optional<std::size_t> order) {
  const auto gc = graded_cocycles(g, d, order);
  return {d, gc.order, gc.z.dim(), gc.b.dim(), gc.z.dim() - gc.b.dim()};
}

LarssonReport larsson_report(const LieAlgebra& g, std::size_t max_degree) {
  if (!g.sl_summands()) throw std::invalid_argument("larsson verdict needs a catalog direct sum of sl(n) algebras");
  if (max_degree < 3) throw std::invalid_argument("max degree must be at least 3");
  LarssonReport r;
  r.g = g.name();
  r.max_degree = max_degree;
  r.sl2_summands = 0;
  for (unsigned rank : *g.sl_summands())
    if (rank == 2) ++r.sl2_summands;

  const std::size_t c2 = binomial(g.dim(), 2);
  const std::size_t b2 = coboundary_forms(g).dim();
  r.verdict = true;
  for (std::size_t d = 2; d <= max_degree; ++d) {
    r.degrees.push_back(graded_h2(g, d));
    const std::size_t want = d == 2 ? c2 - b2 : d == 3 ? 5 * r.sl2_summands : 0;
    r.expected.push_back(want);
    r.verdict = r.verdict && r.degrees.back().h == want;
  }
  r.quadratic_presentation = r.sl2_summands == 0;
  for (const auto& dims : r.degrees)
    if (dims.degree >= 3 && dims.h != 0) r.quadratic_presentation = false;
  return r;
}

DegreeThreeForms sl2_degree_three_forms() {
  const auto g = catalog::sl(2);
  const auto gc = graded_cocycles(g, 3);
  const auto& c = gc.algebra;
  const std::size_t n = c.dim();
  const std::size_t gd = g.dim();

  // psi(x_i, x_j) = Psi(x_i (x) t, x_j (x) t^2).
  Matrix extract(gd * gd, gc.columns.size());
  for (std::size_t col = 0; col < gc.columns.size(); ++col) {
    Vector unit(gc.columns.size());
    unit[col] = 1;
    const auto form = gc.form(unit);
    for (std::size_t i = 0; i < gd; ++i)
      for (std::size_t j = 0; j < gd; ++j) extract(i * gd + j, col) = form[c.index(i, 0) * n + c.index(j, 1)];
  }
  std::vector<Vector> sym_gens;
  for (std::size_t i = 0; i < gd; ++i)
    for (std::size_t j = i; j < gd; ++j) {
      Vector v(gd * gd);
      v[i * gd + j] = 1;
      v[j * gd + i] = 1;
      sym_gens.push_back(std::move(v));
    }
  const auto symmetric = preimage(extract, gc.z, Subspace::span(sym_gens, gd * gd));

  DegreeThreeForms out;
  out.z = gc.z.dim();
  out.b = gc.b.dim();
  out.complements_coboundaries =
      subspace_intersect(symmetric, gc.b).dim() == 0 && subspace_sum(symmetric, gc.b) == gc.z;
  out.relation_holds = true;
  for (std::size_t k = 0; k < symmetric.dim(); ++k) {
    const auto psi_flat = curalg::apply(extract, symmetric.basis().row(k));
    Matrix psi(gd, gd);
    for (std::size_t i = 0; i < gd; ++i)
      for (std::size_t j = 0; j < gd; ++j) psi(i, j) = psi_flat[i * gd + j];
    // basis order (e-, h, e+)
    if (psi(0, 2) != psi(1, 1) / 2) out.relation_holds = false;
    out.symmetric_psi.push_back(std::move(psi));
  }
  return out;
}

DegreeTwoIndependence degree_two_independence(const LieAlgebra& g) {
  const auto gc = graded_cocycles(g, 2);
  const auto& c = gc.algebra;
  const std::size_t n = c.dim();
  const std::size_t gd = g.dim();
  const CochainIndex pairs(n, 2);

  // Skew form phi on g -> Phi(x (x) t, y (x) t) = phi(x, y), in local coordinates.
  std::unordered_map<std::uint32_t, std::size_t> local;
  for (std::size_t i = 0; i < gc.columns.size(); ++i) local.emplace(gc.columns[i], i);
  Matrix embed(gc.columns.size(), gd * gd);
  for (std::size_t i = 0; i < gd; ++i)
    for (std::size_t j = i + 1; j < gd; ++j) {
      const std::array<std::uint32_t, 2> t{static_cast<std::uint32_t>(c.index(i, 0)),
                                           static_cast<std::uint32_t>(c.index(j, 0))};
      embed(local.at(static_cast<std::uint32_t>(pairs.rank(t))), i * gd + j) = 1;
    }
  std::vector<Vector> skew;
  for (std::size_t i = 0; i < gd; ++i)
    for (std::size_t j = i + 1; j < gd; ++j) {
      Vector v(gd * gd);
      v[i * gd + j] = 1;
      v[j * gd + i] = -1;
      skew.push_back(std::move(v));
    }
  const auto all_skew = Subspace::span(skew, gd * gd);
  const auto b2 = coboundary_forms(g);

  DegreeTwoIndependence out{all_skew.dim(), b2.dim(), gc.z.dim(), gc.b.dim()};
  out.cocycles_match = image(embed, all_skew) == gc.z;
  out.coboundaries_match = image(embed, b2) == gc.b;
  return out;
}

std::size_t whole_cocycle_slice(const LieAlgebra& g, std::size_t d, std::size_t order) {
  if (d >= order) throw std::invalid_argument("degree must be below the truncation order");
  const auto c = current(g, catalog::truncated_poly(order, false));
  const auto& deg = *c.degrees();
  const std::size_t n = c.dim();
  std::vector<Vector> slice;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (static_cast<std::size_t>(deg[a] + deg[b]) == d) {
        Vector v(n * n);
        v[a * n + b] = 1;
        slice.push_back(std::move(v));
      }
  return subspace_intersect(cocycle_forms(c.algebra()), Subspace::span(slice, n * n)).dim();
}

std::size_t graded_form_dims(FormCondition cond, SymmetryFilter sym, std::size_t d, std::optional<std::size_t> order) {
  if (d < 2) throw std::invalid_argument("graded degree must be at least 2");
  const std::size_t n_order = order.value_or(d + 1);
  if (n_order <= d) throw std::invalid_argument("truncation order must exceed the degree");
  const auto a = catalog::truncated_poly(n_order, false);
  const std::size_t m = a.dim();
  std::vector<Vector> slice;
  for (std::size_t i = 1; i < d; ++i) {
    Vector v(m * m);
    v[(i - 1) * m + (d - i - 1)] = 1;
    slice.push_back(std::move(v));
  }
  const auto space = condition_space(a, cond, sym).space;
  return subspace_intersect(space, Subspace::span(slice, m * m)).dim();
}

}  // namespace curalg
