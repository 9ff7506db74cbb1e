#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curalg/algebra.hpp"
#include "curalg/subspace.hpp"

namespace curalg {

/// Linear conditions on a bilinear form f over an algebra with product xy
/// (the bracket for Lie algebras):
///   jacobi_sum_zero  f(xy,z) + f(zx,y) + f(yz,x) = 0
///   cyclic           f(xy,z) = f(zx,y)
///   radical          f(xy,z) = f(z,xy) = 0
///   invariant        f(xy,z) + f(y,xz) = 0 (Lie) / f(ab,c) = f(a,bc) (assoc)
///   any              no condition
enum class FormCondition { any, jacobi_sum_zero, cyclic, radical, invariant };
enum class SymmetryFilter { any, symmetric, skew };

std::string_view condition_name(FormCondition c);
std::string_view filter_name(SymmetryFilter s);
FormCondition parse_form_condition(std::string_view name);
SymmetryFilter parse_symmetry_filter(std::string_view name);

/// Subspace of bilinear forms; coordinate of f(x_a, x_b) is a * n + b.
struct FormSpace {
  std::size_t algebra_dim = 0;
  FormCondition condition = FormCondition::any;
  SymmetryFilter symmetry = SymmetryFilter::any;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  Matrix form(std::size_t i) const;
};

FormSpace condition_space(const LieAlgebra& lie, FormCondition cond, SymmetryFilter sym);
FormSpace condition_space(const AssocAlgebra& assoc, FormCondition cond, SymmetryFilter sym);

/// B(L): symmetric invariant forms.
FormSpace invariant_symmetric_forms(const LieAlgebra& lie);

/// Skew forms with alpha(ab,c) + alpha(ca,b) + alpha(bc,a) = 0.
FormSpace hc1_space(const AssocAlgebra& assoc);

/// Direct evaluation of a condition on every basis triple.
bool satisfies(const LieAlgebra& lie, FormCondition cond, const Matrix& form);
bool satisfies(const AssocAlgebra& assoc, FormCondition cond, const Matrix& form);

/// span{ phi (x) alpha } inside the forms on L (x) A, where
/// (phi (x) alpha)(x (x) a, y (x) b) = phi(x,y) alpha(a,b).
Subspace tensor_form_span(const FormSpace& lie_forms, const FormSpace& assoc_forms, const CurrentAlgebra& c);

/// One decomposable type: the two factor spaces and the span they generate.
struct TypeSpan {
  std::string name;
  std::size_t lie_factor_dim;
  std::size_t assoc_factor_dim;
  Subspace span;
};

struct DecompositionReport {
  std::string theorem;  // "h2" or "forms"
  std::string lie;
  std::string assoc;
  Subspace target;      // Z^2(L(x)A, K) or B(L(x)A), as forms
  Subspace span;        // sum of all type spans
  std::vector<TypeSpan> types;
  bool span_in_target = false;
  bool target_in_span = false;
  std::optional<Vector> witness;

  bool ok() const { return span_in_target && target_in_span; }
};

/// Z^2(L(x)A, K) against the 8 decomposable cocycle types.
DecompositionReport verify_h2_decomposition(const LieAlgebra& lie, const AssocAlgebra& assoc);
/// B(L(x)A) against the 6 decomposable form types.
DecompositionReport verify_forms_decomposition(const LieAlgebra& lie, const AssocAlgebra& assoc);

/// Z^2(L(x)A, K) as a subspace of n^2 form coordinates.
Subspace cocycle_forms(const LieAlgebra& lie);
/// B^2(L(x)A, K) as a subspace of n^2 form coordinates.
Subspace coboundary_forms(const LieAlgebra& lie);

struct CoboundarySummandCheck {
  std::size_t coboundary_dim;
  bool in_skew_symmetric;  // inside C^2(L,K) (x) S^2(A,K)
  bool in_symmetric_skew;  // inside S^2(L,K) (x) C^2(A,K)
};

/// Locates B^2(L(x)A, K) relative to the two summands of C^2(L(x)A, K).
CoboundarySummandCheck coboundary_summand_check(const LieAlgebra& lie, const AssocAlgebra& assoc);

}  // namespace curalg
