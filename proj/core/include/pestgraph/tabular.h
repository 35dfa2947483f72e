//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_TABULAR_H_
#define PESTGRAPH_TABULAR_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pestgraph/matrix.h"

namespace pestgraph {

class DegenerateLabels: public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct TabularDataset {
  MatrixD X;
  std::vector<int> y;  // 0/1
  std::vector<std::string> ids;

  std::size_t size() const { return X.rows(); }
  std::size_t dim() const { return X.cols(); }

  // Shape and value checks: matching lengths, y in {0,1}, finite X. With
  // `for_training`, both classes must be present (DegenerateLabels).
  void validate(bool for_training) const;

  TabularDataset subset(std::span<const std::size_t> rows) const;
};

// Stacks feature rows; all rows must have the same width.
MatrixD stack_rows(const std::vector<std::vector<double>> &rows);

// Inverse-frequency sample weights n / (2 n_c), or all ones when disabled.
std::vector<double> class_sample_weights(std::span<const int> y, bool balanced);

}  // namespace pestgraph

#endif  // PESTGRAPH_TABULAR_H_
