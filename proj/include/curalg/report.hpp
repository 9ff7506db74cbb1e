#pragma once

#include <string>

#include "curalg/algebra_io.hpp"
#include "curalg/cochain.hpp"
#include "curalg/derivations.hpp"
#include "curalg/forms.hpp"
#include "curalg/graded.hpp"

namespace curalg {

Json scalar_json(const Scalar& s);
Json vector_json(std::span<const Scalar> v);
Json matrix_json(const Matrix& m);

Json to_json(const CochainSpaceResult& r, const std::string& lie, const std::string& module);
Json to_json(const FormSpace& f, const std::string& algebra);
Json to_json(const DecompositionReport& r);
Json to_json(const MapSpace& m, const std::string& algebra);
Json to_json(const PencilCandidates& p);
Json to_json(const DerDecompositionReport& r);
Json to_json(const SequenceReport& r);
Json to_json(const LoopDerivation& d);
Json to_json(const LarssonReport& r);
Json to_json(const BilinearForm& f);

/// Aligned "path  value" lines, one per leaf, in document order.
std::string render_text(const Json& doc);

}  // namespace curalg
