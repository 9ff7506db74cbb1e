#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "curalg/algebra.hpp"

namespace curalg::catalog {

/// sl(n) on trace-zero matrices. For n = 2 the basis is (e-, h, e+) with
/// [h,e-] = -e-, [h,e+] = e+, [e-,e+] = h. For n >= 3 the basis is the lower
/// E_ij (i > j), then h_i = E_ii - E_{i+1,i+1}, then the upper E_ij.
LieAlgebra sl(unsigned n);
LieAlgebra abelian(std::size_t n);
/// x, y, z with [x, y] = z.
LieAlgebra heisenberg3();
LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);

/// Structure constants of the matrix Lie algebra spanned by `basis`
/// (closed under commutators, linearly independent).
LieAlgebra from_matrices(std::vector<std::string> labels, const std::vector<Matrix>& basis, std::string name);

/// tK[t]/(t^n) with basis t, ..., t^{n-1}, or K[t]/(t^n) with basis
/// 1, t, ..., t^{n-1} when unital. Degree tags are the exponents.
AssocAlgebra truncated_poly(std::size_t n, bool unital);
AssocAlgebra zero_mult(std::size_t n);

/// Shorthand: sl2, sl3, slN, abelian:N, heis3, sum:sl2+sl3; anything else
/// is treated as a path to a JSON algebra file.
LieAlgebra lie_from_descriptor(std::string_view descriptor);
/// Shorthand: tpoly:N, tpoly1:N, zero:N; anything else is a JSON file path.
AssocAlgebra assoc_from_descriptor(std::string_view descriptor);

}  // namespace curalg::catalog
