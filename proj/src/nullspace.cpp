#include "faclab/nullspace.hpp"

#include <stdexcept>
#include <utility>

namespace faclab {

std::vector<std::vector<mpq_class>> nullspace(RationalMatrix rows, std::size_t cols) {
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const mpq_class inv = 1 / rows[rank][col];
    for (std::size_t j = col; j < cols; ++j) rows[rank][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const mpq_class factor = rows[r][col];
      for (std::size_t j = col; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace faclab
