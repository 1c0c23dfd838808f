#pragma once

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace incid4 {

// Small dense matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<Vec4>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> reduce();
  std::size_t rank() const;
  /// Basis of {x : M x = 0}.
  std::vector<std::vector<Scalar>> null_space() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

std::size_t rank_of(const std::vector<Vec4>& vectors);

}  // namespace incid4
