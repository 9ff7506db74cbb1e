#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "curalg/algebra.hpp"
#include "curalg/forms.hpp"
#include "curalg/subspace.hpp"

namespace curalg {

/// Degree-d part of the 2-cochains of g (x) tK[t], computed inside
/// g (x) tK[t]/(t^order). Every product entering a degree-d equation has
/// degree < d, so any order >= d + 1 gives the same answer.
struct GradedCocycles {
  std::size_t degree;
  std::size_t order;
  CurrentAlgebra algebra;
  std::vector<std::uint32_t> columns;  // C^2 ranks (pairs p<q) of total degree d
  Subspace z;                          // inside K^{columns.size()}
  Subspace b;

  /// Local cochain vector -> full skew form on the current algebra.
  Vector form(std::span<const Scalar> local) const;
};

struct GradedDims {
  std::size_t degree;
  std::size_t order;
  std::size_t z, b, h;
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// Throws std::invalid_argument for d < 2 or order <= d.
GradedCocycles graded_cocycles(const LieAlgebra& g, std::size_t d, std::optional<std::size_t> order = std::nullopt);
GradedDims graded_h2(const LieAlgebra& g, std::size_t d, std::optional<std::size_t> order = std::nullopt);

struct LarssonReport {
  std::string g;
  std::size_t max_degree;
  std::size_t sl2_summands;
  std::vector<GradedDims> degrees;  // d = 2 .. max_degree
  std::vector<std::size_t> expected;
  bool verdict = false;
  bool quadratic_presentation = false;
};

/// g must be a catalog direct sum of sl(n)'s; max_degree >= 3.
LarssonReport larsson_report(const LieAlgebra& g, std::size_t max_degree);

/// Degree-3 cocycles Psi(x (x) t, y (x) t^2) = psi(x, y) of sl(2) (x) tK[t]
/// with psi symmetric; these complement the degree-3 coboundaries.
struct DegreeThreeForms {
  std::size_t z, b;
  std::vector<Matrix> symmetric_psi;
  bool complements_coboundaries = false;
  bool relation_holds = false;  // psi(e-,e+) = psi(h,h)/2 on every basis element
};

DegreeThreeForms sl2_degree_three_forms();

/// Degree-2 bookkeeping: Z_2 is the image of all skew forms on g placed on
/// (t, t) and B_2 the image of B^2(g), so classes are independent exactly when
/// their forms are independent modulo B^2(g).
struct DegreeTwoIndependence {
  std::size_t skew_forms, coboundaries, z, b;
  bool cocycles_match = false;
  bool coboundaries_match = false;
  bool ok() const { return cocycles_match && coboundaries_match; }
};

DegreeTwoIndependence degree_two_independence(const LieAlgebra& g);

/// Dimension of the pure degree-d slice of Z^2(g (x) tK[t]/(t^order), K).
std::size_t whole_cocycle_slice(const LieAlgebra& g, std::size_t d, std::size_t order);

/// Degree-d component of a form space on tK[t]: forms on pairs (t^i, t^j)
/// with i + j = d, computed in tK[t]/(t^order).
std::size_t graded_form_dims(FormCondition cond, SymmetryFilter sym, std::size_t d,
                             std::optional<std::size_t> order = std::nullopt);

}  // namespace curalg
