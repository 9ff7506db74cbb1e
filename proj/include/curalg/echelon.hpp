#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "curalg/matrix.hpp"
#include "curalg/sparse.hpp"

namespace curalg {

/// Reduced row-echelon form of a matrix together with its pivot columns.
struct RowEchelon {
  Matrix reduced;                   // rank() rows, no zero rows
  std::vector<std::size_t> pivots;  // strictly increasing
  std::size_t rank() const { return pivots.size(); }
};

/// Incremental Gauss-Jordan elimination.
///
/// The accumulated rows are kept fully reduced at every step: each stored row
/// has a leading 1 at its pivot column and zeros in every other pivot column.
/// Reducing an incoming row therefore takes one subtraction per pivot column
/// where the row is nonzero, which is what makes long sparse constraint
/// streams (n^3 equations in n^2 unknowns) cheap.
///
/// Batches are reduced against the current basis in parallel with OpenMP; the
/// surviving residuals are then inserted one at a time in input order, so the
/// result does not depend on the thread count.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true if the row was independent of everything added so far.
  bool add(Vector row);
  void add_rows(const Matrix& m);
  void add_sparse_rows(std::span<const SparseRow> rows);

  /// Reduces v in place against the basis; true if the residual vanishes.
  bool reduce(Vector& v) const;

  RowEchelon finish() const;

 private:
  struct Row {
    Vector values;
    std::vector<std::uint32_t> support;
    std::size_t pivot;
  };

  void insert_reduced(Vector v);
  static std::vector<std::uint32_t> support_of(const Vector& v);

  std::size_t ambient_;
  std::vector<Row> rows_;
  std::vector<std::int64_t> pivot_row_;  // column -> index into rows_, or -1
};

/// Parallel RREF built on EchelonBuilder.
RowEchelon rref(const Matrix& m);

/// Basis of {x : Mx = 0} read off the RREF (one vector per free column).
std::vector<Vector> nullspace_vectors(const RowEchelon& echelon, std::size_t cols);

}  // namespace curalg
