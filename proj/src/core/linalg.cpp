#include "linalg.hpp"

#include <utility>

namespace incid4 {

RationalMatrix RationalMatrix::from_rows(const std::vector<Vec4>& rows) {
  RationalMatrix m(rows.size(), 4);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  return m;
}

std::vector<std::size_t> RationalMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(p, c), (*this)(row, c));
    Scalar inv = 1 / (*this)(row, col);
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col) == 0) continue;
      Scalar f = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.reduce().size();
}

std::vector<std::vector<Scalar>> RationalMatrix::null_space() const {
  RationalMatrix r = *this;
  auto pivots = r.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(const std::vector<Vec4>& vectors) {
  if (vectors.empty()) return 0;
  return RationalMatrix::from_rows(vectors).rank();
}

}  // namespace incid4
