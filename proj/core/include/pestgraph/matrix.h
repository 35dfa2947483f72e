//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_MATRIX_H_
#define PESTGRAPH_MATRIX_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace pestgraph {

// Row-major dense matrix with value semantics.
template <class T>
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T {})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) { }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return { data_.data() + i * cols_, cols_ }; }
  std::span<const T> row(std::size_t i) const {
    return { data_.data() + i * cols_, cols_ };
  }

  std::vector<T> &data() { return data_; }
  const std::vector<T> &data() const { return data_; }

  friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatrixD = DenseMatrix<double>;

}  // namespace pestgraph

#endif  // PESTGRAPH_MATRIX_H_
