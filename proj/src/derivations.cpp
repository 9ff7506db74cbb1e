#include "curalg/derivations.hpp"

#include <algorithm>
#include <stdexcept>

#include "curalg/catalog.hpp"
#include "curalg/cochain.hpp"
#include "curalg/forms.hpp"
#include "curalg/parallel.hpp"

namespace curalg {

std::string_view map_condition_name(MapCondition c) {
  switch (c) {
    case MapCondition::any: return "any";
    case MapCondition::derivation: return "derivation";
    case MapCondition::antiderivation: return "antiderivation";
    case MapCondition::anti_commuting: return "anti_commuting";
    case MapCondition::left_commuting: return "left_commuting";
    case MapCondition::kills_square: return "kills_square";
    case MapCondition::into_center: return "into_center";
    case MapCondition::skew_square: return "skew_square";
    case MapCondition::centroid: return "centroid";
  }
  return "any";
}

MapCondition parse_map_condition(std::string_view name) {
  for (auto c : {MapCondition::any, MapCondition::derivation, MapCondition::antiderivation,
                 MapCondition::anti_commuting, MapCondition::left_commuting, MapCondition::kills_square,
                 MapCondition::into_center, MapCondition::skew_square, MapCondition::centroid})
    if (map_condition_name(c) == name) return c;
  throw std::invalid_argument("unknown map condition '" + std::string(name) + "'");
}

MapWeights map_condition_weights(MapCondition c) {
  auto w = [](long a, long b, long c2, long d) { return MapWeights{Scalar(a), Scalar(b), Scalar(c2), Scalar(d)}; };
  switch (c) {
    case MapCondition::any: return w(0, 0, 0, 0);
    case MapCondition::derivation: return w(1, -1, -1, 0);
    case MapCondition::antiderivation: return w(1, 1, 1, 0);
    case MapCondition::anti_commuting: return w(0, 1, 1, 0);
    case MapCondition::left_commuting: return w(0, 1, -1, 0);
    case MapCondition::kills_square: return w(1, 0, 0, 0);
    case MapCondition::into_center: return w(0, 1, 0, 0);
    case MapCondition::skew_square: return w(0, 1, 0, 1);
    case MapCondition::centroid: return w(1, -1, 0, 0);
  }
  return w(0, 0, 0, 0);
}

namespace {

// One builder per output coordinate k for the pair (x, y).
void pair_rows(const StructureTable& t, const MapWeights& w, std::size_t x, std::size_t y,
               std::vector<RowBuilder>& rows) {
  const std::size_t n = t.dim();
  if (sgn(w[0]) != 0)
    for (const auto& term : t.product(x, y))
      for (std::size_t k = 0; k < n; ++k) rows[k].add(term.index * n + k, w[0] * term.coeff);
  for (std::size_t b = 0; b < n; ++b) {
    if (sgn(w[1]) != 0)
      for (const auto& term : t.product(b, y)) rows[term.index].add(x * n + b, w[1] * term.coeff);
    if (sgn(w[2]) != 0)
      for (const auto& term : t.product(x, b)) rows[term.index].add(y * n + b, w[2] * term.coeff);
    if (sgn(w[3]) != 0)
      for (const auto& term : t.product(b, x)) rows[term.index].add(y * n + b, w[3] * term.coeff);
  }
}

}  // namespace

LinearSystem map_condition_system(const StructureTable& t, const MapWeights& w) {
  const std::size_t n = t.dim();
  LinearSystem system(n * n);
  auto rows = parallel_rows(n, [&](std::size_t x, std::vector<SparseRow>& out) {
    std::vector<RowBuilder> builders(n);
    for (std::size_t y = 0; y < n; ++y) {
      pair_rows(t, w, x, y, builders);
      for (auto& b : builders) out.push_back(b.take());
    }
  });
  for (auto& r : rows) system.add(std::move(r));
  return system;
}

Matrix map_condition_matrix(const StructureTable& t, const MapWeights& w) {
  const std::size_t n = t.dim();
  Matrix m(n * n * n, n * n);
  std::vector<RowBuilder> builders(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      pair_rows(t, w, x, y, builders);
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& e : builders[k].take()) m((x * n + y) * n + k, e.col) = e.value;
    }
  return m;
}

Matrix map_matrix(std::span<const Scalar> coords, std::size_t n) {
  if (coords.size() != n * n) throw std::invalid_argument("map coordinates have the wrong length");
  Matrix m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(b, a) = coords[a * n + b];
  return m;
}

Vector map_coordinates(const Matrix& m) {
  const std::size_t n = m.rows();
  Vector v(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) v[a * n + b] = m(b, a);
  return v;
}

Matrix MapSpace::map(std::size_t i) const { return map_matrix(space.basis().row(i), algebra_dim); }

namespace {

MapSpace solve_map(const StructureTable& t, MapCondition c) {
  const std::size_t n = t.dim();
  if (c == MapCondition::any) return {n, "any", Subspace::full(n * n)};
  return {n, std::string(map_condition_name(c)), map_condition_system(t, map_condition_weights(c)).solve()};
}

MapSpace solve_conjunction(const StructureTable& t, std::span<const MapCondition> cs) {
  const std::size_t n = t.dim();
  MapSpace out{n, {}, Subspace::full(n * n)};
  for (auto c : cs) {
    if (!out.condition.empty()) out.condition += "+";
    out.condition += map_condition_name(c);
    out.space = subspace_intersect(out.space, solve_map(t, c).space);
  }
  if (out.condition.empty()) out.condition = "any";
  return out;
}

}  // namespace

MapSpace map_condition_space(const LieAlgebra& lie, MapCondition c) { return solve_map(lie.table(), c); }
MapSpace map_condition_space(const AssocAlgebra& assoc, MapCondition c) { return solve_map(assoc.table(), c); }
MapSpace map_condition_space(const LieAlgebra& lie, std::span<const MapCondition> cs) {
  return solve_conjunction(lie.table(), cs);
}
MapSpace map_condition_space(const AssocAlgebra& assoc, std::span<const MapCondition> cs) {
  return solve_conjunction(assoc.table(), cs);
}

MapSpace derivation_space(const LieAlgebra& lie) { return map_condition_space(lie, MapCondition::derivation); }

MapSpace antiderivations(const LieAlgebra& lie) { return map_condition_space(lie, MapCondition::antiderivation); }

MapSpace inner_derivations(const LieAlgebra& lie) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < lie.dim(); ++i) gens.push_back(map_coordinates(lie.ad(i)));
  return {lie.dim(), "inner", Subspace::span(gens, lie.dim() * lie.dim())};
}

bool is_derivation(const LieAlgebra& lie, const Matrix& d) {
  const auto coords = map_coordinates(d);
  const auto system = map_condition_system(lie.table(), map_condition_weights(MapCondition::derivation));
  for (const auto& row : system.rows()) {
    Scalar s = 0;
    for (const auto& e : row) s += e.value * coords[e.col];
    if (sgn(s) != 0) return false;
  }
  return true;
}

namespace {

std::pair<MapWeights, MapWeights> pencil_weights(PencilKind kind, bool lie_side) {
  auto w = [](long a, long b, long c) { return MapWeights{Scalar(a), Scalar(b), Scalar(c), Scalar(0)}; };
  const bool both_terms = (kind == PencilKind::first) == lie_side;
  return {w(1, 0, 0), both_terms ? w(0, 1, 1) : w(0, 1, 0)};
}

PencilCandidates candidates_for(const StructureTable& t, PencilKind kind, bool lie_side, std::uint64_t seed) {
  const auto [w1, w2] = pencil_weights(kind, lie_side);
  return pencil_candidates(map_condition_matrix(t, w1), map_condition_matrix(t, w2), seed);
}

Subspace kernel_at(const StructureTable& t, PencilKind kind, bool lie_side, const Scalar& lambda) {
  const auto [w1, w2] = pencil_weights(kind, lie_side);
  MapWeights w{w1[0] - lambda * w2[0], w1[1] - lambda * w2[1], w1[2] - lambda * w2[2], Scalar(0)};
  return map_condition_system(t, w).solve();
}

}  // namespace

PencilCandidates lambda_candidates(const LieAlgebra& lie, PencilKind kind, std::uint64_t seed) {
  return candidates_for(lie.table(), kind, true, seed);
}

PencilCandidates lambda_candidates(const AssocAlgebra& assoc, PencilKind kind, std::uint64_t seed) {
  return candidates_for(assoc.table(), kind, false, seed);
}

Subspace tensor_map_span(const Subspace& lie_maps, const Subspace& assoc_maps, const CurrentAlgebra& c) {
  const std::size_t nl = c.lie_factor().dim();
  const std::size_t na = c.assoc_factor().dim();
  if (lie_maps.ambient() != nl * nl || assoc_maps.ambient() != na * na)
    throw std::invalid_argument("map spaces do not match the factors of the current algebra");
  const std::size_t n = c.dim();
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < lie_maps.dim(); ++f) {
    const auto d = lie_maps.basis().row(f);
    for (std::size_t g = 0; g < assoc_maps.dim(); ++g) {
      const auto beta = assoc_maps.basis().row(g);
      Vector v(n * n);
      for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t j = 0; j < nl; ++j) {
          const Scalar& dij = d[i * nl + j];
          if (sgn(dij) == 0) continue;
          for (std::size_t p = 0; p < na; ++p)
            for (std::size_t q = 0; q < na; ++q) {
              const Scalar& bpq = beta[p * na + q];
              if (sgn(bpq) == 0) continue;
              v[c.index(i, p) * n + c.index(j, q)] = dij * bpq;
            }
        }
      gens.push_back(std::move(v));
    }
  }
  return Subspace::span(gens, n * n);
}

namespace {

void require_form(const Matrix& m, bool invariant, const std::string& which) {
  if (!(m == m.transpose())) throw AxiomViolation(Axiom::symmetry, {}, which + " form is not symmetric");
  if (!invariant) throw AxiomViolation(Axiom::invariance, {}, which + " form is not invariant");
  if (!is_nondegenerate(m)) throw AxiomViolation(Axiom::nondegeneracy, {}, which + " form is degenerate");
}

// Pairs lambda on the Lie side with 1/lambda on the assoc side.
PencilSummary pair_pencils(const CurrentAlgebra& c, PencilKind kind, std::uint64_t seed, Subspace& span,
                           std::size_t& lie_total, std::size_t& assoc_total) {
  const auto& lt = c.lie_factor().table();
  const auto& at = c.assoc_factor().table();
  PencilSummary s{candidates_for(lt, kind, true, seed), candidates_for(at, kind, false, seed), {}, false};
  const std::size_t ambient = c.dim() * c.dim();
  span = Subspace::zero(ambient);
  lie_total = assoc_total = 0;

  auto try_lambda = [&](const Scalar& lambda) {
    if (sgn(lambda) == 0) return false;
    for (const auto& p : s.pairs)
      if (p.lambda == lambda) return false;
    const auto dl = kernel_at(lt, kind, true, lambda);
    if (dl.dim() == 0) return false;
    const auto da = kernel_at(at, kind, false, 1 / lambda);
    if (da.dim() == 0) return false;
    s.pairs.push_back({lambda, dl.dim(), da.dim()});
    lie_total += dl.dim();
    assoc_total += da.dim();
    const std::size_t before = span.dim();
    span = subspace_sum(span, tensor_map_span(dl, da, c));
    return span.dim() > before;
  };

  if (!s.lie.degenerate) {
    for (const auto& sol : s.lie.solutions) try_lambda(sol.lambda);
  } else if (!s.assoc.degenerate) {
    for (const auto& sol : s.assoc.solutions)
      if (sgn(sol.lambda) != 0) try_lambda(1 / sol.lambda);
  } else {
    // Both sides have kernels at every point: listed values first, then
    // samples until several in a row leave the span unchanged.
    s.sampled = true;
    for (const auto& sol : s.lie.solutions) try_lambda(sol.lambda);
    for (const auto& sol : s.assoc.solutions)
      if (sgn(sol.lambda) != 0) try_lambda(1 / sol.lambda);
    int quiet = 0;
    for (long k = 2; quiet < 4 && k < 40; ++k) {
      const Scalar sample = (k % 2 == 0) ? Scalar(k / 2 + 1, 1) : Scalar(1, k / 2 + 2);
      const bool grew = try_lambda(sample) || try_lambda(-sample);
      quiet = grew ? 0 : quiet + 1;
    }
  }
  std::sort(s.pairs.begin(), s.pairs.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  return s;
}

struct ConditionPair {
  const char* name;
  std::vector<MapCondition> lie;
  std::vector<MapCondition> assoc;
};

}  // namespace

DerDecompositionReport theorem_der_span(const LieAlgebra& lie, const AssocAlgebra& assoc, const BilinearForm& lie_form,
                                        const BilinearForm& assoc_form, std::uint64_t seed) {
  if (lie.table().is_zero()) throw std::invalid_argument("the Lie factor must be nonabelian");
  require_form(lie_form.matrix, is_invariant(lie, lie_form.matrix), "Lie");
  require_form(assoc_form.matrix, is_invariant(assoc, assoc_form.matrix), "associative");

  const auto c = current(lie, assoc);
  const std::size_t ambient = c.dim() * c.dim();
  DerDecompositionReport r;
  r.lie = lie.name();
  r.assoc = assoc.name();
  r.der = derivation_space(c.algebra()).space;
  r.inner = inner_derivations(c.algebra()).space;

  std::vector<Subspace> parts;
  {
    DerTypeSpan t{"i", 0, 0, {}};
    r.first_pencil = pair_pencils(c, PencilKind::first, seed, t.span, t.lie_factor_dim, t.assoc_factor_dim);
    parts.push_back(t.span);
    r.types.push_back(std::move(t));
  }
  {
    DerTypeSpan t{"ii", 0, 0, {}};
    r.second_pencil = pair_pencils(c, PencilKind::second, seed, t.span, t.lie_factor_dim, t.assoc_factor_dim);
    parts.push_back(t.span);
    r.types.push_back(std::move(t));
  }

  using MC = MapCondition;
  const std::vector<ConditionPair> table{
      {"iii", {MC::anti_commuting}, {MC::kills_square, MC::left_commuting}},
      {"iv", {MC::kills_square, MC::anti_commuting}, {MC::left_commuting}},
      {"v", {MC::kills_square, MC::skew_square}, {MC::anti_commuting}},
      {"vi", {MC::skew_square}, {MC::kills_square, MC::anti_commuting}},
      {"vii", {MC::kills_square, MC::into_center}, {}},
      {"viii", {MC::kills_square}, {MC::into_center}},
      {"ix", {MC::into_center}, {MC::kills_square}},
      {"x", {}, {MC::kills_square, MC::into_center}},
  };
  for (const auto& row : table) {
    const auto dl = map_condition_space(lie, row.lie);
    const auto da = map_condition_space(assoc, row.assoc);
    auto span = tensor_map_span(dl.space, da.space, c);
    parts.push_back(span);
    r.types.push_back({row.name, dl.dim(), da.dim(), std::move(span)});
  }

  // ad(x (x) a) = ad x (x) R_a.
  {
    std::vector<Vector> ads, mults;
    for (std::size_t i = 0; i < lie.dim(); ++i) ads.push_back(map_coordinates(lie.ad(i)));
    for (std::size_t p = 0; p < assoc.dim(); ++p) {
      Matrix rp(assoc.dim(), assoc.dim());
      for (std::size_t q = 0; q < assoc.dim(); ++q)
        for (const auto& term : assoc.product(p, q)) rp(term.index, q) = term.coeff;
      mults.push_back(map_coordinates(rp));
    }
    const auto ad_span = Subspace::span(ads, lie.dim() * lie.dim());
    const auto mult_span = Subspace::span(mults, assoc.dim() * assoc.dim());
    auto span = tensor_map_span(ad_span, mult_span, c);
    parts.push_back(span);
    r.types.push_back({"inner", ad_span.dim(), mult_span.dim(), std::move(span)});
  }

  r.span = subspace_sum(parts, ambient);
  r.generators_are_derivations = r.types.back().span == r.inner;
  for (const auto& t : r.types) r.generators_are_derivations = r.generators_are_derivations && r.der.contains(t.span);
  r.span_in_der = r.der.contains(r.span);
  if (!r.span_in_der) {
    for (std::size_t i = 0; i < r.span.dim(); ++i)
      if (!r.der.contains(r.span.basis().row(i))) {
        r.witness = r.span.basis_vector(i);
        break;
      }
  }
  r.der_in_span = r.span.contains(r.der);
  if (!r.der_in_span && !r.witness) {
    for (std::size_t i = 0; i < r.der.dim(); ++i)
      if (!r.span.contains(r.der.basis().row(i))) {
        r.witness = r.der.basis_vector(i);
        break;
      }
  }
  return r;
}

DerDecompositionReport verify_der_decomposition(const LieAlgebra& lie, const AssocAlgebra& assoc,
                                                std::uint64_t seed) {
  return theorem_der_span(lie, assoc, killing_form(lie), residue_form(assoc), seed);
}

Matrix sequence_u(std::size_t n) { return Matrix::identity(n * n); }

Matrix sequence_v(std::size_t n) {
  Matrix v(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      v(a * n + b, a * n + b) += 1;
      v(a * n + b, b * n + a) += 1;
    }
  return v;
}

Matrix sequence_w(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  const CochainIndex triples(n, 3);
  Matrix w(triples.size(), n * n);
  for (std::size_t r = 0; r < triples.size(); ++r) {
    const auto t = triples.tuple(r);
    for (const auto& term : lie.bracket(t[0], t[1])) w(r, term.index * n + t[2]) += term.coeff;
  }
  return w;
}

bool SequenceReport::ok() const {
  const bool flags = u_into_z1 && u_injective && v_into_b && v_kills_b1 && vu_zero && w_into_z3 && wv_zero &&
                     exact_at_h1 && exact_at_b && im_u == ker_v && im_v == ker_w && h1() == im_u + im_v &&
                     im_u == h2();
  if (!transport) return flags;
  return flags && transport->der_onto_z1 && transport->inner_onto_b1 && transport->h1_adjoint() == h1();
}

SequenceReport sequence_maps(const LieAlgebra& lie, const std::optional<BilinearForm>& form) {
  const std::size_t n = lie.dim();
  const auto trivial = module_build(LieModule::Kind::trivial, lie);
  const auto coadjoint = module_build(LieModule::Kind::coadjoint, lie);

  const auto z2 = cocycle_forms(lie);
  const auto b2 = coboundary_forms(lie);
  const auto c1 = cohomology(lie, coadjoint, 1);
  const auto& z1 = c1.z_space;
  const auto& b1 = c1.b_space;
  const auto bl = invariant_symmetric_forms(lie).space;
  const auto c3 = cohomology(lie, trivial, 3);

  const auto u = sequence_u(n);
  const auto v = sequence_v(n);
  const auto w = sequence_w(lie);

  SequenceReport r;
  r.lie = lie.name();
  r.z2 = z2.dim();
  r.b2 = b2.dim();
  r.z1 = z1.dim();
  r.b1 = b1.dim();
  r.b_forms = bl.dim();
  r.z3 = c3.z_space.dim();
  r.b3 = c3.b_space.dim();

  const auto u_z2 = image(u, z2);
  const auto u_plus_b1 = subspace_sum(u_z2, b1);
  r.im_u = u_plus_b1.dim() - b1.dim();
  r.u_into_z1 = z1.contains(u_z2);
  r.u_injective = subspace_intersect(u_z2, b1) == image(u, b2);

  const auto ker_v_z1 = preimage(v, z1, Subspace::zero(n * n));
  r.ker_v = subspace_sum(ker_v_z1, b1).dim() - b1.dim();
  r.exact_at_h1 = subspace_sum(ker_v_z1, b1) == u_plus_b1;

  const auto v_z1 = image(v, z1);
  r.im_v = v_z1.dim();
  r.v_into_b = bl.contains(v_z1);
  r.v_kills_b1 = image(v, b1).dim() == 0;
  r.vu_zero = image(v, u_z2).dim() == 0;

  r.w_into_z3 = c3.z_space.contains(image(w, bl));
  const auto ker_w = preimage(w, bl, c3.b_space);
  r.ker_w = ker_w.dim();
  r.wv_zero = c3.b_space.contains(image(w, v_z1));
  r.exact_at_b = ker_w == v_z1;

  if (form) {
    const Matrix& g = form->matrix;
    if (!(g == g.transpose()) || !is_invariant(lie, g) || !is_nondegenerate(g))
      throw AxiomViolation(Axiom::nondegeneracy, {}, "transport form must be symmetric, invariant and nondegenerate");
    // D(x_a)(x_c) = <D'(x_a), x_c> = sum_b D'[a n + b] g(b, c).
    Matrix t(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) t(a * n + c, a * n + b) = g(b, c);
    const auto der = derivation_space(lie).space;
    const auto inner = inner_derivations(lie).space;
    r.transport = SequenceReport::Transport{der.dim(), inner.dim(), image(t, der) == z1, image(t, inner) == b1};
  }
  return r;
}

LoopDerivation sl2_loop_derivation(std::size_t order) {
  if (order < 3) throw std::invalid_argument("the truncation order must be at least 3");
  const auto sl2 = catalog::sl(2);
  const auto tp = catalog::truncated_poly(order, false);
  LoopDerivation out{order, current(sl2, tp), {}, false, false, std::nullopt};
  const auto& c = out.algebra;
  const std::size_t m = order - 1;  // exponents 1..order-1 at positions 0..m-1
  const std::size_t n = c.dim();
  Matrix d(n, n);
  const long signs[3] = {-1, 0, 1};  // e-, h, e+
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      const long k = static_cast<long>(p + 1);
      d(c.index(i, p), c.index(i, p)) = k;
      if (signs[i] != 0 && p + 1 < m) d(c.index(i, p + 1), c.index(i, p)) = signs[i];
    }
  out.map = d;

  const auto& deg = *c.degrees();
  out.identity_holds = true;
  for (std::size_t a = 0; a < n && out.identity_holds; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (static_cast<std::size_t>(deg[a] + deg[b]) >= order) continue;
      Vector ea(n), eb(n);
      ea[a] = 1;
      eb[b] = 1;
      const auto lhs = curalg::apply(d, c.algebra().bracket(ea, eb));
      const auto da = d.column_vector(a);
      const auto db = d.column_vector(b);
      auto rhs = c.algebra().bracket(da, eb);
      const auto second = c.algebra().bracket(ea, db);
      for (std::size_t k = 0; k < n; ++k) rhs[k] += second[k];
      if (lhs != rhs) {
        out.identity_holds = false;
        break;
      }
    }

  // Coefficient tensor flattened to End(sl2) coordinates x End(t-part) coordinates.
  Matrix f(9, m * m);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) f(i * 3 + j, p * m + q) = d(c.index(j, q), c.index(i, p));
  for (std::size_t r1 = 0; r1 < f.rows() && !out.minor; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < f.rows() && !out.minor; ++r2)
      for (std::size_t c1 = 0; c1 < f.cols() && !out.minor; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < f.cols(); ++c2)
          if (sgn(f(r1, c1) * f(r2, c2) - f(r1, c2) * f(r2, c1)) != 0) {
            out.minor = std::array<std::size_t, 4>{r1, r2, c1, c2};
            break;
          }
  out.nondecomposable = out.minor.has_value();
  return out;
}

}  // namespace curalg
