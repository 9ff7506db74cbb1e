#pragma once

#include "curalg/echelon.hpp"
#include "curalg/matrix.hpp"

namespace curalg::reference {

/// Textbook column-by-column Gauss-Jordan, single threaded. Kept as the
/// baseline the parallel kernel is tested and benchmarked against.
RowEchelon rref_serial(const Matrix& m);

}  // namespace curalg::reference
