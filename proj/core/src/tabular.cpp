//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/tabular.h"

#include <cmath>

namespace pestgraph {

void TabularDataset::validate(bool for_training) const {
  if (y.size() != X.rows())
    throw std::invalid_argument("label count " + std::to_string(y.size()) +
                                " != row count " + std::to_string(X.rows()));
  if (!ids.empty() && ids.size() != X.rows())
    throw std::invalid_argument("id count does not match row count");
  std::size_t pos = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != 0 && y[i] != 1)
      throw std::invalid_argument("labels must be 0 or 1 (row " +
                                  std::to_string(i) + ")");
    pos += y[i];
  }
  for (std::size_t i = 0; i < X.rows(); ++i)
    for (double v: X.row(i))
      if (!std::isfinite(v))
        throw std::invalid_argument("non-finite feature value in row " +
                                    std::to_string(i));
  if (for_training && (pos == 0 || pos == y.size()))
    throw DegenerateLabels("training labels must contain both classes");
}

TabularDataset TabularDataset::subset(std::span<const std::size_t> rows) const {
  TabularDataset out;
  out.X = MatrixD(rows.size(), X.cols());
  out.y.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto src = X.row(rows[r]);
    std::copy(src.begin(), src.end(), out.X.row(r).begin());
    out.y.push_back(y[rows[r]]);
    if (!ids.empty())
      out.ids.push_back(ids[rows[r]]);
  }
  return out;
}

MatrixD stack_rows(const std::vector<std::vector<double>> &rows) {
  const std::size_t d = rows.empty() ? 0 : rows[0].size();
  MatrixD m(rows.size(), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d)
      throw std::invalid_argument("feature row " + std::to_string(i) +
                                  " has width " +
                                  std::to_string(rows[i].size()) +
                                  ", expected " + std::to_string(d));
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

std::vector<double> class_sample_weights(std::span<const int> y,
                                         bool balanced) {
  std::vector<double> w(y.size(), 1.0);
  if (!balanced)
    return w;
  double count[2] = { 0, 0 };
  for (int v: y)
    count[v != 0] += 1.0;
  const double n = static_cast<double>(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double c = count[y[i] != 0];
    w[i] = c > 0 ? n / (2.0 * c) : 1.0;
  }
  return w;
}

}  // namespace pestgraph
