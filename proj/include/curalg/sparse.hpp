#pragma once

#include <cstdint>
#include <vector>

#include "curalg/scalar.hpp"

namespace curalg {

struct SparseEntry {
  std::uint32_t col;
  Scalar value;
};

/// Sorted by column, no zero entries, no repeated columns.
using SparseRow = std::vector<SparseEntry>;

/// Accumulates coefficients of a linear equation; repeated columns are summed.
class RowBuilder {
 public:
  void add(std::size_t col, const Scalar& value);
  /// Sorts, merges and drops cancelled entries. Leaves the builder empty.
  SparseRow take();
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<SparseEntry> entries_;
};

}  // namespace curalg
