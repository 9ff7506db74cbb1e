#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "curalg/echelon.hpp"
#include "curalg/matrix.hpp"
#include "curalg/sparse.hpp"

namespace curalg {

/// Subspace of K^n stored as its canonical RREF basis, so equal subspaces have
/// identical bases and equality is a plain comparison.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(const Matrix& generators);
  static Subspace span(const std::vector<Vector>& generators, std::size_t ambient);
  static Subspace from_echelon(RowEchelon echelon, std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  /// Throws std::invalid_argument on ambient mismatch.
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the stored basis; v must lie in the subspace.
  Vector coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : Mv = 0}; dimension = cols - rank(M).
Subspace kernel_basis(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_sum(std::span<const Subspace> parts, std::size_t ambient);

/// Kernel of the stacked annihilator system [ann U; ann V].
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Orthogonal complement under the coordinate dot product.
Subspace annihilator(const Subspace& u);

/// M(U) for the linear map v -> Mv.
Subspace image(const Matrix& m, const Subspace& u);

/// {v in U : Mv in W}.
Subspace preimage(const Matrix& m, const Subspace& u, const Subspace& w);

/// Homogeneous linear system with sparse equations over `unknowns` variables.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }

  void add(SparseRow row);
  void append(LinearSystem&& other);
  const std::vector<SparseRow>& rows() const { return rows_; }

  /// Rows of the system in canonical echelon form.
  RowEchelon echelon() const;
  /// The solution space.
  Subspace solve() const;
  std::size_t rank() const { return echelon().rank(); }

 private:
  std::size_t unknowns_;
  std::vector<SparseRow> rows_;
};

}  // namespace curalg
