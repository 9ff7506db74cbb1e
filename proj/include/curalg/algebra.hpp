#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "curalg/matrix.hpp"
#include "curalg/subspace.hpp"

namespace curalg {

struct Term {
  std::uint32_t index;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sorted by index, no zero coefficients.
using Terms = std::vector<Term>;

/// Bilinear product on K^n given by structure constants: x_i * x_j = sum_k c_ijk x_k.
class StructureTable {
 public:
  StructureTable() = default;
  explicit StructureTable(std::size_t dim) : dim_(dim), table_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Terms& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Scalar coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  void set(std::size_t i, std::size_t j, std::span<const Scalar> coords);
  void set(std::size_t i, std::size_t j, Terms terms);

  /// Bilinear extension to arbitrary coordinate vectors.
  Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
  bool is_zero() const;

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Terms> table_;
};

enum class Axiom {
  anticommutativity,
  jacobi,
  commutativity,
  associativity,
  unit,
  representation,
  symmetry,
  invariance,
  nondegeneracy,
};

std::string_view axiom_name(Axiom axiom);

/// Raised when structure constants (or a form / module) break an axiom.
/// The witness holds the offending 0-based basis indices.
class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(Axiom axiom, std::vector<std::size_t> witness, const std::string& detail);
  Axiom axiom() const { return axiom_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  Axiom axiom_;
  std::vector<std::size_t> witness_;
};

/// First basis triple violating Jacobi, if any (i < j < k).
std::optional<std::vector<std::size_t>> find_jacobi_violation(const StructureTable& t);
std::optional<std::vector<std::size_t>> find_anticommutativity_violation(const StructureTable& t);
std::optional<std::vector<std::size_t>> find_commutativity_violation(const StructureTable& t);
std::optional<std::vector<std::size_t>> find_associativity_violation(const StructureTable& t);

/// Finite-dimensional Lie algebra. Construction validates anticommutativity
/// and the Jacobi identity over all basis triples.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, StructureTable bracket, std::string name = {});

  std::size_t dim() const { return table_.dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const StructureTable& table() const { return table_; }

  const Terms& bracket(std::size_t i, std::size_t j) const { return table_.product(i, j); }
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const { return table_.multiply(x, y); }

  /// Matrix of ad x_i acting on column vectors: column j holds [x_i, x_j].
  Matrix ad(std::size_t i) const;

  /// Ranks n of the sl(n) summands when the algebra is a catalog direct sum
  /// of special linear algebras; empty optional otherwise.
  const std::optional<std::vector<unsigned>>& sl_summands() const { return sl_summands_; }
  LieAlgebra& set_sl_summands(std::vector<unsigned> ranks);

 private:
  std::vector<std::string> labels_;
  StructureTable table_;
  std::string name_;
  std::optional<std::vector<unsigned>> sl_summands_;
};

/// Finite-dimensional commutative associative algebra. Construction validates
/// commutativity, associativity and (when requested) locates the unit.
class AssocAlgebra {
 public:
  AssocAlgebra(std::vector<std::string> labels, StructureTable product, bool unital,
               std::optional<std::vector<int>> degrees = std::nullopt, std::string name = {});

  std::size_t dim() const { return table_.dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const StructureTable& table() const { return table_; }
  const Terms& product(std::size_t i, std::size_t j) const { return table_.product(i, j); }
  Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const { return table_.multiply(a, b); }

  bool unital() const { return unit_.has_value(); }
  const std::optional<Vector>& unit() const { return unit_; }
  const std::optional<std::vector<int>>& degrees() const { return degrees_; }

  /// n when this is the catalog algebra tK[t]/(t^n) (basis t, ..., t^{n-1}).
  std::optional<std::size_t> truncation_order() const { return truncation_order_; }
  AssocAlgebra& set_truncation_order(std::size_t n);

 private:
  std::vector<std::string> labels_;
  StructureTable table_;
  std::string name_;
  std::optional<Vector> unit_;
  std::optional<std::vector<int>> degrees_;
  std::optional<std::size_t> truncation_order_;
};

/// L (x) A with [x (x) a, y (x) b] = [x, y] (x) ab. Flat index of x_i (x) a_p
/// is i * dim(A) + p.
class CurrentAlgebra {
 public:
  CurrentAlgebra(LieAlgebra lie, AssocAlgebra assoc);

  const LieAlgebra& algebra() const { return algebra_; }
  const LieAlgebra& lie_factor() const { return lie_; }
  const AssocAlgebra& assoc_factor() const { return assoc_; }
  std::size_t dim() const { return algebra_.dim(); }

  std::size_t index(std::size_t i, std::size_t p) const { return i * assoc_.dim() + p; }
  std::pair<std::size_t, std::size_t> split(std::size_t k) const { return {k / assoc_.dim(), k % assoc_.dim()}; }

  /// Degree of each flat basis element, inherited from A's degree tags.
  const std::optional<std::vector<int>>& degrees() const { return degrees_; }

 private:
  LieAlgebra lie_;
  AssocAlgebra assoc_;
  LieAlgebra algebra_;
  std::optional<std::vector<int>> degrees_;
};

CurrentAlgebra current(const LieAlgebra& lie, const AssocAlgebra& assoc);

enum class Symmetry { symmetric, skew, none };
std::string_view symmetry_name(Symmetry s);

struct BilinearForm {
  Matrix matrix;  // matrix(i, j) = form(x_i, x_j)
  Symmetry symmetry;

  /// Tags the matrix by inspection (the zero form counts as symmetric).
  static BilinearForm classify(Matrix m);
  Scalar operator()(std::span<const Scalar> x, std::span<const Scalar> y) const;
};

Subspace derived_subalgebra(const LieAlgebra& lie);
Subspace center_lie(const LieAlgebra& lie);
/// Z(A) = {a : Aa = 0}.
Subspace annihilator_assoc(const AssocAlgebra& assoc);
/// AA = span of all pairwise products.
Subspace square_assoc(const AssocAlgebra& assoc);

/// kappa(x_i, x_j) = trace(ad x_i ad x_j); invariance is asserted.
BilinearForm killing_form(const LieAlgebra& lie);

/// <t^i, t^j> = 1 if i + j = n else 0 on tK[t]/(t^n). Throws
/// std::invalid_argument for any other algebra.
BilinearForm residue_form(const AssocAlgebra& assoc);

/// phi([x,y],z) + phi(y,[x,z]) = 0 on all basis triples.
bool is_invariant(const LieAlgebra& lie, const Matrix& form);
/// alpha(ab, c) = alpha(a, bc) on all basis triples.
bool is_invariant(const AssocAlgebra& assoc, const Matrix& form);
bool is_nondegenerate(const Matrix& form);

}  // namespace curalg
