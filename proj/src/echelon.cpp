#include "curalg/echelon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace curalg {

namespace {

constexpr std::size_t kBatch = 256;

Vector densify(const SparseRow& row, std::size_t ambient) {
  Vector v(ambient);
  for (const auto& e : row) {
    if (e.col >= ambient) throw std::out_of_range("sparse row column out of range");
    v[e.col] = e.value;
  }
  return v;
}

}  // namespace

EchelonBuilder::EchelonBuilder(std::size_t ambient) : ambient_(ambient), pivot_row_(ambient, -1) {}

std::vector<std::uint32_t> EchelonBuilder::support_of(const Vector& v) {
  std::vector<std::uint32_t> s;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (sgn(v[j]) != 0) s.push_back(static_cast<std::uint32_t>(j));
  return s;
}

bool EchelonBuilder::reduce(Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("row length does not match ambient dimension");
  Scalar tmp;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (sgn(v[c]) == 0) continue;
    const std::int64_t r = pivot_row_[c];
    if (r < 0) continue;
    // Stored rows vanish on every other pivot column, so this only touches
    // column c and free columns; one left-to-right pass suffices.
    const Row& row = rows_[static_cast<std::size_t>(r)];
    const Scalar factor = v[c];
    for (std::uint32_t j : row.support) {
      tmp = factor * row.values[j];
      v[j] -= tmp;
    }
  }
  return is_zero(v);
}

void EchelonBuilder::insert_reduced(Vector v) {
  std::size_t pivot = 0;
  while (pivot < ambient_ && sgn(v[pivot]) == 0) ++pivot;
  if (pivot == ambient_) return;
  const Scalar inv = 1 / v[pivot];
  for (auto& x : v)
    if (sgn(x) != 0) x *= inv;
  const auto support = support_of(v);

  const auto n_rows = static_cast<std::int64_t>(rows_.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n_rows; ++i) {
    Row& row = rows_[static_cast<std::size_t>(i)];
    if (sgn(row.values[pivot]) == 0) continue;
    const Scalar factor = row.values[pivot];
    Scalar tmp;
    for (std::uint32_t j : support) {
      tmp = factor * v[j];
      row.values[j] -= tmp;
    }
    row.support = support_of(row.values);
  }

  pivot_row_[pivot] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(Row{std::move(v), support, pivot});
}

bool EchelonBuilder::add(Vector row) {
  if (reduce(row)) return false;
  insert_reduced(std::move(row));
  return true;
}

void EchelonBuilder::add_rows(const Matrix& m) {
  if (m.cols() != ambient_) throw std::invalid_argument("matrix width does not match ambient dimension");
  for (std::size_t start = 0; start < m.rows(); start += kBatch) {
    const std::size_t count = std::min(kBatch, m.rows() - start);
    std::vector<Vector> residual(count);
    std::vector<char> vanished(count);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      const auto k = static_cast<std::size_t>(i);
      residual[k] = m.row_vector(start + k);
      vanished[k] = reduce(residual[k]);
    }
    for (std::size_t k = 0; k < count; ++k)
      if (!vanished[k]) add(std::move(residual[k]));
  }
}

void EchelonBuilder::add_sparse_rows(std::span<const SparseRow> rows) {
  for (std::size_t start = 0; start < rows.size(); start += kBatch) {
    const std::size_t count = std::min(kBatch, rows.size() - start);
    std::vector<Vector> residual(count);
    std::vector<char> vanished(count);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      const auto k = static_cast<std::size_t>(i);
      residual[k] = densify(rows[start + k], ambient_);
      vanished[k] = reduce(residual[k]);
    }
    for (std::size_t k = 0; k < count; ++k)
      if (!vanished[k]) add(std::move(residual[k]));
  }
}

RowEchelon EchelonBuilder::finish() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].pivot < rows_[b].pivot; });
  RowEchelon out{Matrix(rows_.size(), ambient_), {}};
  for (std::size_t r = 0; r < order.size(); ++r) {
    const Row& row = rows_[order[r]];
    std::copy(row.values.begin(), row.values.end(), out.reduced.row(r).begin());
    out.pivots.push_back(row.pivot);
  }
  return out;
}

RowEchelon rref(const Matrix& m) {
  EchelonBuilder builder(m.cols());
  builder.add_rows(m);
  return builder.finish();
}

std::vector<Vector> nullspace_vectors(const RowEchelon& echelon, std::size_t cols) {
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t p : echelon.pivots) is_pivot[p] = 1;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < echelon.rank(); ++i) v[echelon.pivots[i]] = -echelon.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace curalg
