#include "curalg/sparse.hpp"

#include <algorithm>

namespace curalg {

void RowBuilder::add(std::size_t col, const Scalar& value) {
  if (sgn(value) == 0) return;
  entries_.push_back({static_cast<std::uint32_t>(col), value});
}

SparseRow RowBuilder::take() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  SparseRow row;
  for (auto& e : entries_) {
    if (!row.empty() && row.back().col == e.col) {
      row.back().value += e.value;
      if (sgn(row.back().value) == 0) row.pop_back();
    } else {
      row.push_back(std::move(e));
    }
  }
  entries_.clear();
  return row;
}

}  // namespace curalg
