#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curalg/algebra.hpp"
#include "curalg/pencil.hpp"
#include "curalg/subspace.hpp"

namespace curalg {

/// Linear conditions on an endomorphism D of an algebra with product xy.
/// Each is a combination of the four terms D(xy), D(x)y, xD(y), D(y)x
/// required to vanish for all basis pairs (x, y):
///   derivation       D(xy) = D(x)y + xD(y)
///   antiderivation   D(xy) = -D(x)y - xD(y)
///   anti_commuting   D(x)y + xD(y) = 0
///   left_commuting   D(x)y = xD(y)
///   kills_square     D(xy) = 0
///   into_center      D(x)y = 0        (image in Z(L), resp. Z(A))
///   skew_square      D(x)y + D(y)x = 0 (polarized D(x)x = 0)
///   centroid         D(xy) = D(x)y
enum class MapCondition {
  any,
  derivation,
  antiderivation,
  anti_commuting,
  left_commuting,
  kills_square,
  into_center,
  skew_square,
  centroid,
};

std::string_view map_condition_name(MapCondition c);
MapCondition parse_map_condition(std::string_view name);

/// Weights of D(xy), D(x)y, xD(y), D(y)x.
using MapWeights = std::array<Scalar, 4>;
MapWeights map_condition_weights(MapCondition c);

/// The equations sum_t w_t * term_t = 0 for every basis pair and output
/// coordinate. Unknown a*n+b is the coefficient of x_b in D(x_a).
LinearSystem map_condition_system(const StructureTable& t, const MapWeights& w);
/// Same equations as a dense matrix (for small algebras).
Matrix map_condition_matrix(const StructureTable& t, const MapWeights& w);

/// Subspace of endomorphisms; coordinate a*n+b is the coefficient of x_b in D(x_a).
struct MapSpace {
  std::size_t algebra_dim = 0;
  std::string condition;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  /// Basis map i as a matrix acting on column vectors.
  Matrix map(std::size_t i) const;
};

/// Matrix acting on column vectors <-> map coordinates.
Matrix map_matrix(std::span<const Scalar> coords, std::size_t n);
Vector map_coordinates(const Matrix& m);

MapSpace map_condition_space(const LieAlgebra& lie, MapCondition c);
MapSpace map_condition_space(const AssocAlgebra& assoc, MapCondition c);
/// Conjunction of conditions, built by intersecting the primitive spaces.
MapSpace map_condition_space(const LieAlgebra& lie, std::span<const MapCondition> cs);
MapSpace map_condition_space(const AssocAlgebra& assoc, std::span<const MapCondition> cs);

MapSpace derivation_space(const LieAlgebra& lie);
MapSpace inner_derivations(const LieAlgebra& lie);
MapSpace antiderivations(const LieAlgebra& lie);

/// Exact check of D(xy) = D(x)y + xD(y) over all basis pairs.
bool is_derivation(const LieAlgebra& lie, const Matrix& d);

/// The two pencils of the first two decomposable types.
enum class PencilKind {
  first,   // d([x,y]) = l([dx,y] + [x,dy])  /  b(ab) = m b(a)b
  second,  // d([x,y]) = l [dx,y]            /  b(ab) = m (b(a)b + a b(b))
};

PencilCandidates lambda_candidates(const LieAlgebra& lie, PencilKind kind = PencilKind::first, std::uint64_t seed = 0);
PencilCandidates lambda_candidates(const AssocAlgebra& assoc, PencilKind kind = PencilKind::first,
                                   std::uint64_t seed = 0);

/// span{ d (x) b } in End(L (x) A) for d, b ranging over bases.
Subspace tensor_map_span(const Subspace& lie_maps, const Subspace& assoc_maps, const CurrentAlgebra& c);

struct DerTypeSpan {
  std::string name;  // "i" .. "x", "inner"
  std::size_t lie_factor_dim;
  std::size_t assoc_factor_dim;
  Subspace span;
};

struct LambdaPair {
  Scalar lambda;  // the paired value on the assoc side is 1/lambda
  std::size_t lie_dim;
  std::size_t assoc_dim;
};

struct PencilSummary {
  PencilCandidates lie;
  PencilCandidates assoc;
  std::vector<LambdaPair> pairs;
  bool sampled = false;  // both pencils degenerate: lambda values were sampled
};

struct DerDecompositionReport {
  std::string lie;
  std::string assoc;
  Subspace der;
  Subspace inner;
  Subspace span;  // sum of all type spans, inner included
  std::vector<DerTypeSpan> types;
  PencilSummary first_pencil;
  PencilSummary second_pencil;
  bool generators_are_derivations = false;
  bool span_in_der = false;
  bool der_in_span = false;
  std::optional<Vector> witness;

  bool ok() const { return generators_are_derivations && span_in_der && der_in_span; }
};

/// Decomposable-derivation span of L (x) A; the forms certify the hypotheses
/// (symmetric, invariant, nondegenerate) and L must be nonabelian.
DerDecompositionReport theorem_der_span(const LieAlgebra& lie, const AssocAlgebra& assoc, const BilinearForm& lie_form,
                                        const BilinearForm& assoc_form, std::uint64_t seed = 0);

/// Uses the Killing form on L and the residue form on A.
DerDecompositionReport verify_der_decomposition(const LieAlgebra& lie, const AssocAlgebra& assoc,
                                                std::uint64_t seed = 0);

/// The maps u, v, w between Z^2(L,K), Z^1(L,L*), B(L) and Z^3(L,K).
/// Forms and C^1(L,L*) share coordinates: D(x_a)(x_b) sits at a*n+b.
struct SequenceReport {
  std::string lie;
  std::size_t z2, b2, z1, b1, b_forms, z3, b3;
  std::size_t h2() const { return z2 - b2; }
  std::size_t h1() const { return z1 - b1; }
  std::size_t h3() const { return z3 - b3; }

  std::size_t im_u;  // dim of the image of u in H^1(L,L*)
  std::size_t ker_v; // dim of the kernel of v on H^1(L,L*)
  std::size_t im_v;  // dim v(Z^1) inside B(L)
  std::size_t ker_w; // dim of the forms in B(L) sent into B^3

  bool u_into_z1 = false;
  bool u_injective = false;  // u(Z^2) meets B^1 exactly in u(B^2)
  bool v_into_b = false;
  bool v_kills_b1 = false;
  bool vu_zero = false;
  bool w_into_z3 = false;
  bool wv_zero = false;  // w(v(Z^1)) inside B^3
  bool exact_at_h1 = false;
  bool exact_at_b = false;

  /// Filled when a nondegenerate symmetric invariant form identifies L with L*.
  struct Transport {
    std::size_t der_dim;
    std::size_t inner_dim;
    bool der_onto_z1;
    bool inner_onto_b1;
    std::size_t h1_adjoint() const { return der_dim - inner_dim; }
  };
  std::optional<Transport> transport;

  bool ok() const;
};

SequenceReport sequence_maps(const LieAlgebra& lie, const std::optional<BilinearForm>& form = std::nullopt);

/// Matrices of u, v, w on full coordinates: u and v act on n^2 form
/// coordinates, w sends n^2 form coordinates to C^3(L,K).
Matrix sequence_u(std::size_t n);
Matrix sequence_v(std::size_t n);
Matrix sequence_w(const LieAlgebra& lie);

/// e-(x)t^k -> e-(x)(k t^k - t^{k+1}), e+(x)t^k -> e+(x)(k t^k + t^{k+1}),
/// h(x)t^k -> h(x) k t^k on sl(2) (x) tK[t]/(t^N).
struct LoopDerivation {
  std::size_t order;
  CurrentAlgebra algebra;
  Matrix map;                      // acting on column vectors
  bool identity_holds = false;     // on all pairs of total degree < N
  bool nondecomposable = false;    // a nonzero 2x2 minor was found
  std::optional<std::array<std::size_t, 4>> minor;  // rows r1 r2, cols c1 c2
};

LoopDerivation sl2_loop_derivation(std::size_t order);

}  // namespace curalg
