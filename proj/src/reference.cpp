#include "curalg/reference.hpp"

namespace curalg::reference {

RowEchelon rref_serial(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pick = lead_row;
    while (pick < a.rows() && sgn(a(pick, col)) == 0) ++pick;
    if (pick == a.rows()) continue;
    if (pick != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) swap(a(pick, j), a(lead_row, j));
    const Scalar inv = 1 / a(lead_row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || sgn(a(r, col)) == 0) continue;
      const Scalar factor = a(r, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) -= factor * a(lead_row, j);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  RowEchelon out{Matrix(pivots.size(), a.cols()), pivots};
  for (std::size_t r = 0; r < pivots.size(); ++r)
    std::copy(a.row(r).begin(), a.row(r).end(), out.reduced.row(r).begin());
  return out;
}

}  // namespace curalg::reference
