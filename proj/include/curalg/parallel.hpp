#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "curalg/sparse.hpp"

namespace curalg {

/// Runs `emit(i, out)` for i in [0, count) across OpenMP threads and returns
/// the rows concatenated in index order, independent of scheduling.
template <class Emit>
std::vector<SparseRow> parallel_rows(std::size_t count, Emit&& emit) {
  std::vector<std::vector<SparseRow>> chunks(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
    emit(static_cast<std::size_t>(i), chunks[static_cast<std::size_t>(i)]);
  std::vector<SparseRow> rows;
  for (auto& c : chunks)
    for (auto& r : c)
      if (!r.empty()) rows.push_back(std::move(r));
  return rows;
}

}  // namespace curalg
