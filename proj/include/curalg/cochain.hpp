#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "curalg/algebra.hpp"
#include "curalg/sparse.hpp"
#include "curalg/subspace.hpp"

namespace curalg {

/// Finite-dimensional representation rho of a Lie algebra; rho(x_i) acts on
/// column vectors.
class LieModule {
 public:
  enum class Kind { trivial, adjoint, coadjoint, custom };

  /// Checks rho([x_i,x_j]) = rho(x_i) rho(x_j) - rho(x_j) rho(x_i).
  LieModule(const LieAlgebra& lie, std::vector<Matrix> action, Kind kind = Kind::custom);

  std::size_t dim() const { return dim_; }
  std::size_t lie_dim() const { return action_.size(); }
  Kind kind() const { return kind_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }

 private:
  std::vector<Matrix> action_;
  std::size_t dim_ = 0;
  Kind kind_;
};

/// trivial: rho = 0 on K^m; adjoint: ad; coadjoint: -(ad)^T on the dual basis.
LieModule module_build(LieModule::Kind kind, const LieAlgebra& lie, std::size_t trivial_dim = 1);

/// Strictly increasing k-subsets of {0..n-1} in lexicographic order. The
/// order is the cochain coordinate order: coordinate = rank * dim(M) + m.
class CochainIndex {
 public:
  CochainIndex(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return count_; }
  std::span<const std::uint32_t> tuple(std::size_t rank) const { return {tuples_.data() + rank * k_, k_}; }
  std::size_t rank(std::span<const std::uint32_t> tuple) const;

 private:
  std::size_t n_, k_, count_;
  std::vector<std::uint32_t> tuples_;
  std::vector<std::vector<std::size_t>> binom_;
};

std::size_t binomial(std::size_t n, std::size_t k);

/// Row of d^n for the (n+1)-tuple `tuple` and module component m, over the
/// C^n coordinates. Convention:
///   (d w)(x_0..x_n) = sum_i (-1)^i x_i . w(..^i..)
///                   + sum_{i<j} (-1)^{i+j} w([x_i,x_j], ..^i..^j..)
SparseRow ce_differential_row(const LieAlgebra& lie, const LieModule& module, const CochainIndex& columns,
                              std::span<const std::uint32_t> tuple, std::size_t m);

/// Matrix of d^n : C^n(L,M) -> C^{n+1}(L,M), 0 <= n <= 3.
Matrix ce_differential(const LieAlgebra& lie, const LieModule& module, std::size_t n);
/// The same equations as sparse rows (the cocycle system of degree n).
LinearSystem ce_cocycle_system(const LieAlgebra& lie, const LieModule& module, std::size_t n);

struct CochainSpaceResult {
  std::size_t degree;
  std::size_t cochain_dim;
  Subspace z_space;
  Subspace b_space;
  std::size_t h_dim;
};

/// Z^n = ker d^n, B^n = im d^{n-1}, 1 <= n <= 3. Asserts d^n d^{n-1} = 0
/// and B^n in Z^n.
CochainSpaceResult cohomology(const LieAlgebra& lie, const LieModule& module, std::size_t n);

/// Exact check d^n o d^{n-1} = 0.
bool differential_squares_to_zero(const LieAlgebra& lie, const LieModule& module, std::size_t n);

/// C^2(L,K) coordinates (pairs p<q) <-> full n x n skew form coordinates
/// (index a*n+b).
Vector skew_form_from_cochain(std::span<const Scalar> cochain, std::size_t n);
Vector cochain_from_skew_form(std::span<const Scalar> form, std::size_t n);
/// Embeds a subspace of C^2(L,K) into the n^2 form space.
Subspace skew_forms_from_cochains(const Subspace& cochains, std::size_t n);

}  // namespace curalg
