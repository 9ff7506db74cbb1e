#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "curalg/matrix.hpp"
#include "curalg/subspace.hpp"

namespace curalg {

/// Polynomial with coefficients listed from the constant term upwards.
using Polynomial = std::vector<Scalar>;

Scalar determinant(Matrix m);
Scalar evaluate(const Polynomial& p, const Scalar& x);
/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

struct RationalRoots {
  std::vector<Scalar> roots;          // distinct, increasing
  std::size_t remaining_degree = 0;   // degree left after dividing out the rational roots
  bool exhaustive = true;             // false if a coefficient could not be factored
};

/// Rational roots by the rational root test. The zero polynomial has no roots
/// listed and remaining_degree 0.
RationalRoots rational_roots(Polynomial p);

/// Solution space of M1 v = lambda M2 v.
Subspace pencil_kernel(const Matrix& m1, const Matrix& m2, const Scalar& lambda);

struct LambdaSolution {
  Scalar lambda;
  Subspace space;
};

/// All rational lambda for which M1 v = lambda M2 v has a nonzero solution.
struct PencilCandidates {
  /// True when the kernel is nonzero for every lambda; candidates are then
  /// not enumerated and generic_dim holds the kernel dimension at a generic point.
  bool degenerate = false;
  std::size_t generic_dim = 0;
  std::vector<LambdaSolution> solutions;  // increasing lambda
  /// Degree of the part of the characteristic polynomial without rational roots.
  std::size_t irrational_locus_degree = 0;
  bool exhaustive = true;
  /// Independent check by random square projections (small pencils only).
  std::optional<bool> projection_roots_agree;

  const LambdaSolution* find(const Scalar& lambda) const;
};

/// `forced` lambdas are always examined and listed if their kernel is nonzero.
/// `seed` drives the random projections of the cross-check.
PencilCandidates pencil_candidates(const Matrix& m1, const Matrix& m2, std::uint64_t seed = 0,
                                   const std::vector<Scalar>& forced = {Scalar(1), Scalar(1, 2)});

}  // namespace curalg
