#include <doctest.h>

#include <random>

#include "curalg/echelon.hpp"
#include "curalg/reference.hpp"
#include "curalg/subspace.hpp"
#include "oracle.hpp"

using namespace curalg;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density_pct) {
  std::uniform_int_distribution<int> entry(-5, 5), pct(0, 99), den(1, 4);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pct(rng) < density_pct) {
        m(r, c) = Scalar(entry(rng), den(rng));
        m(r, c).canonicalize();
      }
  return m;
}

// Low rank: product of two random factors.
Matrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  return random_matrix(rng, rows, k, 80) * random_matrix(rng, k, cols, 80);
}

Vector e(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("scalar parsing and formatting") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(parse_scalar(" 2/3 ") == Scalar(2, 3));
  CHECK(format_scalar(Scalar(-3, 2)) == "-3/2");
  CHECK(format_scalar(parse_scalar("4/2")) == "2");
  CHECK(format_scalar(parse_scalar("0/5")) == "0");
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
}

TEST_CASE("rref small cases") {
  auto id = rref(Matrix::identity(3));
  CHECK(id.reduced == Matrix::identity(3));
  CHECK(id.rank() == 3);

  auto dep = rref(Matrix::of({{1, 2}, {2, 4}}));
  CHECK(dep.rank() == 1);
  CHECK(dep.reduced == Matrix::of({{1, 2}}));
  CHECK(dep.pivots == std::vector<std::size_t>{0});

  auto perm = rref(Matrix::of({{0, 1}, {1, 0}}));
  CHECK(perm.reduced == Matrix::identity(2));

  auto zero = rref(Matrix(2, 3));
  CHECK(zero.rank() == 0);
}

TEST_CASE("parallel rref agrees with the serial reference") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> size(1, 14);
    const auto rows = static_cast<std::size_t>(size(rng)), cols = static_cast<std::size_t>(size(rng));
    Matrix m = trial % 2 ? random_matrix(rng, rows, cols, 30 + trial)
                         : random_low_rank(rng, rows, cols, 1 + static_cast<std::size_t>(trial % 5));
    auto par = rref(m);
    auto ser = reference::rref_serial(m);
    CHECK(par.reduced == ser.reduced);
    CHECK(par.pivots == ser.pivots);
    CHECK(par.rank() == oracle::rank(oracle::rows_of(m)));
  }
}

TEST_CASE("rref output is reduced and spans the row space") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_low_rank(rng, 9, 11, 4);
    auto r = rref(m);
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < r.rank(); ++j) CHECK(r.reduced(i, r.pivots[j]) == (i == j ? 1 : 0));
    CHECK(oracle::same_span(oracle::rows_of(r.reduced), oracle::rows_of(m)));
  }
}

TEST_CASE("echelon builder is order independent up to canonical form") {
  std::mt19937_64 rng(11);
  Matrix m = random_low_rank(rng, 12, 8, 5);
  EchelonBuilder fwd(8), bwd(8);
  for (std::size_t r = 0; r < m.rows(); ++r) fwd.add(m.row_vector(r));
  for (std::size_t r = m.rows(); r-- > 0;) bwd.add(m.row_vector(r));
  CHECK(fwd.finish().reduced == bwd.finish().reduced);
  Vector v = m.row_vector(3);
  CHECK(fwd.reduce(v));
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);
  CHECK(kernel_basis(Matrix::identity(4)).dim() == 0);
  auto k = kernel_basis(Matrix::of({{1, 1, 1}}));
  REQUIRE(k.dim() == 2);
  for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(curalg::apply(Matrix::of({{1, 1, 1}}), k.basis_vector(i))));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    Matrix m = random_low_rank(rng, 6, 10, 3);
    auto ker = kernel_basis(m);
    CHECK(ker.dim() + oracle::rank(oracle::rows_of(m)) == 10);
    for (std::size_t i = 0; i < ker.dim(); ++i) CHECK(is_zero(curalg::apply(m, ker.basis_vector(i))));
  }
}

TEST_CASE("subspace sum and intersection") {
  auto e1 = Subspace::span({e(2, 0)}, 2), e2 = Subspace::span({e(2, 1)}, 2);
  CHECK(subspace_sum(e1, Subspace::zero(2)) == e1);
  CHECK(subspace_sum(e1, e2) == Subspace::full(2));
  CHECK(subspace_sum(Subspace::span({Vector{1, 1}}, 2), Subspace::span({Vector{1, -1}}, 2)) == Subspace::full(2));
  CHECK(subspace_intersect(e1, Subspace::full(2)) == e1);
  CHECK(subspace_intersect(e1, e2).dim() == 0);
  auto u = Subspace::span({e(3, 0), e(3, 1)}, 3), v = Subspace::span({e(3, 1), e(3, 2)}, 3);
  CHECK(subspace_intersect(u, v) == Subspace::span({e(3, 1)}, 3));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = Subspace::span(random_low_rank(rng, 4, 9, 3));
    auto b = Subspace::span(random_low_rank(rng, 5, 9, 4));
    auto s = subspace_sum(a, b), i = subspace_intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(annihilator(annihilator(a)) == a);
    CHECK(annihilator(a).dim() + a.dim() == 9);
  }
}

TEST_CASE("contains, coordinates and errors") {
  auto u = Subspace::span({Vector{1, 2, 0}, Vector{0, 1, 1}}, 3);
  Vector v{2, 5, 1};
  CHECK(u.contains(v));
  CHECK_FALSE(u.contains(Vector{0, 0, 1}));
  auto c = u.coordinates(v);
  Vector back(3);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) back[j] += c[i] * u.basis()(i, j);
  CHECK(back == v);
  CHECK_THROWS_AS(u.contains(Vector{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(subspace_sum(u, Subspace::full(2)), std::invalid_argument);
}

TEST_CASE("image and preimage") {
  Matrix m = Matrix::of({{1, 0, 0}, {0, 0, 0}, {0, 1, 0}});
  auto full = Subspace::full(3);
  auto im = image(m, full);
  CHECK(im == Subspace::span({e(3, 0), e(3, 2)}, 3));
  auto pre = preimage(m, full, Subspace::span({e(3, 0)}, 3));
  CHECK(pre == Subspace::span({e(3, 0), e(3, 2)}, 3));
}

TEST_CASE("linear system from sparse rows") {
  LinearSystem sys(4);
  RowBuilder b;
  b.add(0, 1);
  b.add(2, -1);
  b.add(0, 1);
  sys.add(b.take());
  b.add(1, 3);
  b.add(1, -3);
  sys.add(b.take());  // cancels to nothing
  CHECK(sys.rank() == 1);
  auto sol = sys.solve();
  CHECK(sol.dim() == 3);
  CHECK(sol.contains(Vector{1, 0, 2, 0}));
}
