#include <doctest.h>

#include "curalg/catalog.hpp"
#include "curalg/derivations.hpp"
#include "curalg/forms.hpp"
#include "curalg/pencil.hpp"
#include "oracle.hpp"

using namespace curalg;

namespace {

// D(xy), D(x)y, xD(y), D(y)x with the given weights, on every basis pair.
oracle::Vec map_values(const oracle::Tensor& t, const MapWeights& w, const oracle::Vec& d) {
  const auto n = t.n;
  oracle::Vec out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto X = oracle::unit(n, x), Y = oracle::unit(n, y);
      auto dx = oracle::apply_map(d, n, X), dy = oracle::apply_map(d, n, Y);
      oracle::Vec s(n);
      s = oracle::add(s, oracle::apply_map(d, n, oracle::mul(t, X, Y)), w[0]);
      s = oracle::add(s, oracle::mul(t, dx, Y), w[1]);
      s = oracle::add(s, oracle::mul(t, X, dy), w[2]);
      s = oracle::add(s, oracle::mul(t, dy, X), w[3]);
      out.insert(out.end(), s.begin(), s.end());
    }
  return out;
}

std::size_t oracle_map_dim(const StructureTable& table, const MapWeights& w) {
  auto t = oracle::tensor(table);
  return oracle::solution_dim(t.n * t.n, [&](const oracle::Vec& d) { return map_values(t, w, d); });
}

const MapCondition all_map_conditions[] = {MapCondition::any,           MapCondition::derivation,
                                           MapCondition::antiderivation, MapCondition::anti_commuting,
                                           MapCondition::left_commuting, MapCondition::kills_square,
                                           MapCondition::into_center,    MapCondition::skew_square,
                                           MapCondition::centroid};

}  // namespace

TEST_CASE("map conditions match brute force") {
  for (const char* name : {"sl2", "heis3", "abelian:2"}) {
    auto lie = catalog::lie_from_descriptor(name);
    for (auto c : all_map_conditions) {
      auto ms = map_condition_space(lie, c);
      CHECK_MESSAGE(ms.dim() == oracle_map_dim(lie.table(), map_condition_weights(c)),
                    name << " " << map_condition_name(c));
    }
  }
  for (const char* name : {"tpoly:3", "tpoly:4", "tpoly1:3", "zero:2"}) {
    auto a = catalog::assoc_from_descriptor(name);
    for (auto c : all_map_conditions) {
      auto ms = map_condition_space(a, c);
      CHECK_MESSAGE(ms.dim() == oracle_map_dim(a.table(), map_condition_weights(c)),
                    name << " " << map_condition_name(c));
    }
  }
}

TEST_CASE("derivations and antiderivations") {
  auto sl2 = catalog::sl(2);
  CHECK(derivation_space(sl2).dim() == 3);
  CHECK(derivation_space(sl2).space == inner_derivations(sl2).space);
  CHECK(derivation_space(catalog::abelian(3)).dim() == 9);
  CHECK(inner_derivations(catalog::heisenberg3()).dim() == 2);
  CHECK(antiderivations(catalog::sl(3)).dim() == 0);
  CHECK(antiderivations(sl2).dim() == 5);
  CHECK(antiderivations(catalog::abelian(3)).dim() == 9);
  auto der = derivation_space(catalog::heisenberg3());
  CHECK(der.dim() == oracle_map_dim(catalog::heisenberg3().table(), map_condition_weights(MapCondition::derivation)));
  for (std::size_t i = 0; i < der.dim(); ++i) CHECK(is_derivation(catalog::heisenberg3(), der.map(i)));
  CHECK(der.space.contains(inner_derivations(catalog::heisenberg3()).space));
}

TEST_CASE("antiderivations correspond to symmetric sum-zero forms through the Killing form") {
  for (const char* name : {"sl2", "sl3"}) {
    auto lie = catalog::lie_from_descriptor(name);
    auto sym = condition_space(lie, FormCondition::jacobi_sum_zero, SymmetryFilter::symmetric);
    auto ad = antiderivations(lie);
    CHECK(ad.dim() == sym.dim());
    // phi(x, y) = <D x, y>
    auto k = killing_form(lie).matrix;
    std::vector<Vector> forms;
    for (std::size_t i = 0; i < ad.dim(); ++i) {
      auto f = ad.map(i).transpose() * k;
      CHECK(f == f.transpose());
      CHECK(satisfies(lie, FormCondition::jacobi_sum_zero, f));
      Vector v;
      for (std::size_t a = 0; a < f.rows(); ++a)
        for (std::size_t b = 0; b < f.cols(); ++b) v.push_back(f(a, b));
      forms.push_back(v);
    }
    CHECK(Subspace::span(forms, lie.dim() * lie.dim()) == sym.space);
    // skew sum-zero forms transport to derivations instead
    auto skew = condition_space(lie, FormCondition::jacobi_sum_zero, SymmetryFilter::skew);
    if (lie.dim() == 3) {
      for (std::size_t i = 0; i < skew.dim(); ++i) {
        // D^T = phi K^{-1}; for sl2 K^{-1} = K / 4
        auto dt = skew.form(i) * (Scalar(1, 4) * k);
        CHECK(is_derivation(lie, dt.transpose()));
      }
    }
  }
}

TEST_CASE("selected map spaces") {
  auto sl2 = catalog::sl(2);
  std::array<MapCondition, 2> centroid{MapCondition::centroid, MapCondition::left_commuting};
  CHECK(map_condition_space(sl2, centroid).dim() == 1);
  CHECK(map_condition_space(sl2, MapCondition::into_center).dim() == 0);
  for (std::size_t n = 2; n <= 6; ++n) {
    auto a = catalog::truncated_poly(n, false);
    auto lc = map_condition_space(a, MapCondition::left_commuting);
    CHECK(lc.dim() == oracle_map_dim(a.table(), map_condition_weights(MapCondition::left_commuting)));
  }
}

TEST_CASE("map coordinates") {
  Vector coords{1, 2, 3, 4};  // D(x_0) = x_0 + 2 x_1, D(x_1) = 3 x_0 + 4 x_1
  auto m = map_matrix(coords, 2);
  CHECK(curalg::apply(m, Vector{1, 0}) == Vector{1, 2});
  CHECK(map_coordinates(m) == coords);
}

TEST_CASE("polynomial helpers") {
  CHECK(determinant(Matrix::of({{2, 1}, {1, 3}})) == 5);
  CHECK(determinant(Matrix::of({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(Matrix::of({{1, 2}, {2, 4}})) == 0);
  Polynomial p{Scalar(-1), Scalar(0), Scalar(1)};  // x^2 - 1
  CHECK(evaluate(p, 3) == 8);
  auto q = interpolate({0, 1, 2}, {evaluate(p, 0), evaluate(p, 1), evaluate(p, 2)});
  CHECK(q == p);
  // (2x - 1)(x + 3)(x^2 + 1)
  Polynomial r{Scalar(-3), Scalar(5), Scalar(-1), Scalar(5), Scalar(2)};
  auto roots = rational_roots(r);
  CHECK(roots.roots == std::vector<Scalar>{-3, Scalar(1, 2)});
  CHECK(roots.remaining_degree == 2);
  CHECK(roots.exhaustive);
  CHECK(rational_roots({Scalar(0), Scalar(0), Scalar(1)}).roots == std::vector<Scalar>{0});
}

TEST_CASE("pencil candidates") {
  // M1 = diag(1, 2, 3), M2 = I: rank drops at 1, 2, 3.
  Matrix m1 = Matrix::of({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  auto pc = pencil_candidates(m1, Matrix::identity(3));
  CHECK_FALSE(pc.degenerate);
  REQUIRE(pc.solutions.size() == 3);
  CHECK(pc.solutions[1].lambda == 2);
  CHECK(pc.solutions[1].space.dim() == 1);
  CHECK(pc.projection_roots_agree == true);
  auto zero = pencil_candidates(Matrix(3, 2), Matrix(3, 2));
  CHECK(zero.degenerate);
  CHECK(zero.generic_dim == 2);
  // x^2 - 2 has no rational roots
  Matrix rot = Matrix::of({{0, 2}, {1, 0}});
  auto irr = pencil_candidates(rot, Matrix::identity(2));
  CHECK(irr.solutions.empty());
  CHECK(irr.irrational_locus_degree == 2);
}

TEST_CASE("lambda candidates") {
  for (const char* name : {"sl2", "sl3"}) {
    auto lie = catalog::lie_from_descriptor(name);
    auto pc = lambda_candidates(lie);
    REQUIRE(pc.find(1) != nullptr);
    REQUIRE(pc.find(Scalar(1, 2)) != nullptr);
    CHECK(pc.find(1)->space.dim() == lie.dim());
    CHECK(pc.find(Scalar(1, 2))->space.dim() == 1);
    for (const auto& s : pc.solutions) {
      auto m = map_condition_matrix(lie.table(), {Scalar(1), -s.lambda, -s.lambda, Scalar(0)});
      CHECK(kernel_basis(m) == s.space);
    }
  }
  CHECK(lambda_candidates(catalog::abelian(3)).degenerate);
}

TEST_CASE("der decomposition") {
  for (std::size_t n : {2u, 3u, 4u}) {
    auto r = verify_der_decomposition(catalog::sl(2), catalog::truncated_poly(n, false));
    CHECK(r.ok());
    CHECK(r.generators_are_derivations);
    auto c = current(catalog::sl(2), catalog::truncated_poly(n, false));
    CHECK(r.der.dim() == oracle_map_dim(c.algebra().table(), map_condition_weights(MapCondition::derivation)));
  }
  auto r3 = verify_der_decomposition(catalog::sl(3), catalog::truncated_poly(2, false));
  CHECK(r3.ok());
  CHECK_THROWS(verify_der_decomposition(catalog::sl(2), catalog::zero_mult(1)));
  auto heis = catalog::heisenberg3();
  CHECK_THROWS(theorem_der_span(catalog::abelian(2), catalog::truncated_poly(3, false),
                                BilinearForm::classify(Matrix::identity(2)),
                                residue_form(catalog::truncated_poly(3, false))));
  CHECK_THROWS_AS(theorem_der_span(heis, catalog::truncated_poly(3, false), killing_form(heis),
                                   residue_form(catalog::truncated_poly(3, false))),
                  AxiomViolation);
}

TEST_CASE("tensor map span") {
  auto sl2 = catalog::sl(2);
  auto a = catalog::truncated_poly(3, false);
  auto c = current(sl2, a);
  auto s = tensor_map_span(inner_derivations(sl2).space, Subspace::full(4), c);
  CHECK(s.dim() == 12);
  auto der = derivation_space(c.algebra());
  CHECK(der.space.contains(tensor_map_span(inner_derivations(sl2).space,
                                           map_condition_space(a, MapCondition::centroid).space, c)));
}

TEST_CASE("exact sequence") {
  auto sl2 = sequence_maps(catalog::sl(2), killing_form(catalog::sl(2)));
  CHECK(sl2.ok());
  CHECK(sl2.h2() == 0);
  CHECK(sl2.h1() == 0);
  CHECK(sl2.b_forms == 1);
  CHECK(sl2.h3() == 1);
  CHECK(sl2.w_into_z3);
  CHECK(sl2.exact_at_h1);
  CHECK(sl2.exact_at_b);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto ab = sequence_maps(catalog::abelian(n));
    CHECK(ab.ok());
    CHECK(ab.z1 == n * n);
    CHECK(ab.z2 == n * (n - 1) / 2);
    CHECK(ab.b_forms == n * (n + 1) / 2);
    CHECK(ab.im_u + ab.im_v == n * n);
  }
  const auto n = 3;
  auto u = sequence_u(n), v = sequence_v(n);
  CHECK((v * u).is_zero() == false);  // v u kills only skew forms
  Vector skew(n * n);
  skew[1] = 1;
  skew[3] = -1;
  CHECK(is_zero(curalg::apply(v, curalg::apply(u, skew))));
}

TEST_CASE("sequence on a current algebra agrees with derivations") {
  auto lie = catalog::sl(2);
  auto a = catalog::truncated_poly(3, false);
  auto c = current(lie, a);
  auto k = killing_form(lie).matrix;
  auto res = residue_form(a).matrix;
  Matrix prod(c.dim(), c.dim());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t q = 0; q < 2; ++q) prod(c.index(i, p), c.index(j, q)) = k(i, j) * res(p, q);
  auto r = sequence_maps(c.algebra(), BilinearForm::classify(prod));
  CHECK(r.ok());
  REQUIRE(r.transport.has_value());
  CHECK(r.h1() == r.transport->h1_adjoint());
  CHECK(r.h1() == r.im_u + r.im_v);
  CHECK(r.transport->der_dim == derivation_space(c.algebra()).dim());
}

TEST_CASE("sl2 loop derivation") {
  auto d = sl2_loop_derivation(4);
  CHECK(d.identity_holds);
  CHECK(d.nondecomposable);
  auto& c = d.algebra;
  // D(h (x) t) = h (x) t, D(e+ (x) t) = e+ (x) (t + t^2)
  CHECK(d.map(c.index(1, 0), c.index(1, 0)) == 1);
  CHECK(d.map(c.index(2, 0), c.index(2, 0)) == 1);
  CHECK(d.map(c.index(2, 1), c.index(2, 0)) == 1);
  // [e- (x) t, e+ (x) t] checked directly
  auto t = oracle::tensor(c.algebra().table());
  const auto n = c.dim();
  Vector coords = map_coordinates(d.map);
  auto X = oracle::unit(n, c.index(0, 0)), Y = oracle::unit(n, c.index(2, 0));
  auto lhs = oracle::apply_map(coords, n, oracle::mul(t, X, Y));
  auto rhs = oracle::add(oracle::mul(t, oracle::apply_map(coords, n, X), Y),
                         oracle::mul(t, X, oracle::apply_map(coords, n, Y)));
  CHECK(lhs == rhs);
  CHECK_THROWS(sl2_loop_derivation(2));
}
