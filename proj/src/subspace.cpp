#include "curalg/subspace.hpp"

#include <stdexcept>

namespace curalg {

namespace {

void require_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::from_echelon(RowEchelon echelon, std::size_t ambient) {
  if (echelon.reduced.rows() != echelon.rank()) throw std::logic_error("echelon form carries zero rows");
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = echelon.rank() == 0 ? Matrix(0, ambient) : std::move(echelon.reduced);
  s.pivots_ = std::move(echelon.pivots);
  return s;
}

Subspace Subspace::span(const Matrix& generators) {
  return from_echelon(rref(generators), generators.cols());
}

Subspace Subspace::span(const std::vector<Vector>& generators, std::size_t ambient) {
  EchelonBuilder builder(ambient);
  for (const auto& g : generators) builder.add(g);
  return from_echelon(builder.finish(), ambient);
}

bool Subspace::contains(std::span<const Scalar> v) const {
  require_same_ambient(ambient_, v.size());
  Vector w(v.begin(), v.end());
  Scalar tmp;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar factor = w[pivots_[i]];
    if (sgn(factor) == 0) continue;
    const auto row = basis_.row(i);
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(row[j]) == 0) continue;
      tmp = factor * row[j];
      w[j] -= tmp;
    }
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(ambient_, other.ambient_);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw std::invalid_argument("vector does not lie in the subspace");
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace kernel_basis(const Matrix& m) {
  const auto echelon = rref(m);
  return Subspace::span(nullspace_vectors(echelon, m.cols()), m.cols());
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u.ambient(), v.ambient());
  EchelonBuilder builder(u.ambient());
  builder.add_rows(u.basis());
  builder.add_rows(v.basis());
  return Subspace::from_echelon(builder.finish(), u.ambient());
}

Subspace subspace_sum(std::span<const Subspace> parts, std::size_t ambient) {
  EchelonBuilder builder(ambient);
  for (const auto& p : parts) {
    require_same_ambient(p.ambient(), ambient);
    builder.add_rows(p.basis());
  }
  return Subspace::from_echelon(builder.finish(), ambient);
}

Subspace annihilator(const Subspace& u) { return kernel_basis(u.basis()); }

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u.ambient(), v.ambient());
  const auto ann = subspace_sum(annihilator(u), annihilator(v));
  return kernel_basis(ann.basis());
}

Subspace image(const Matrix& m, const Subspace& u) {
  require_same_ambient(m.cols(), u.ambient());
  EchelonBuilder builder(m.rows());
  for (std::size_t i = 0; i < u.dim(); ++i) builder.add(apply(m, u.basis().row(i)));
  return Subspace::from_echelon(builder.finish(), m.rows());
}

Subspace preimage(const Matrix& m, const Subspace& u, const Subspace& w) {
  require_same_ambient(m.cols(), u.ambient());
  require_same_ambient(m.rows(), w.ambient());
  // v = sum c_i u_i lies in the preimage iff ann(W) M U^T c = 0.
  const Matrix images = m * u.basis().transpose();
  const Matrix system = annihilator(w).basis() * images;
  const auto coeffs = kernel_basis(system);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < coeffs.dim(); ++k) {
    Vector v(u.ambient());
    for (std::size_t i = 0; i < u.dim(); ++i) {
      const Scalar& c = coeffs.basis()(k, i);
      if (sgn(c) == 0) continue;
      const auto row = u.basis().row(i);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * row[j];
    }
    out.push_back(std::move(v));
  }
  return Subspace::span(out, u.ambient());
}

void LinearSystem::add(SparseRow row) {
  for (const auto& e : row)
    if (e.col >= unknowns_) throw std::out_of_range("equation refers to an unknown out of range");
  if (!row.empty()) rows_.push_back(std::move(row));
}

void LinearSystem::append(LinearSystem&& other) {
  require_same_ambient(unknowns_, other.unknowns_);
  for (auto& r : other.rows_) rows_.push_back(std::move(r));
  other.rows_.clear();
}

RowEchelon LinearSystem::echelon() const {
  EchelonBuilder builder(unknowns_);
  builder.add_sparse_rows(rows_);
  return builder.finish();
}

Subspace LinearSystem::solve() const {
  return Subspace::span(nullspace_vectors(echelon(), unknowns_), unknowns_);
}

}  // namespace curalg
