//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_SVM_H_
#define PESTGRAPH_SVM_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pestgraph/matrix.h"

namespace pestgraph {

struct SvmConfig {
  double C = 1.0;
  double tol = 1e-3;
  long max_passes = 1000000;  // cap on SMO pair updates
  bool class_weight = false;  // C_c = C * n / (2 n_c)
};

struct SvmModel {
  // One coefficient per training row, in training order.
  std::vector<double> alpha;
  std::vector<int> y_signed;  // +1 / -1
  std::vector<double> upper;  // per-row box bound C_i
  double bias = 0.0;
  SvmConfig config;
  std::string kernel_tag;
  std::vector<std::string> train_ids;
  long iterations = 0;
  double max_violation = 0.0;  // m(alpha) - M(alpha) at termination
  bool converged = false;

  std::size_t n_support() const;

  // f(x) = sum_i alpha_i y_i K(i, x) + b, given kernel values between x and
  // every training row.
  double decision(std::span<const double> kernel_row) const;
  // Rows of `cross` are test items, columns training items.
  std::vector<double> decision(const MatrixD &cross) const;
  std::vector<int> predict(const MatrixD &cross) const;

  std::string to_json() const;
  static SvmModel from_json(const std::string &text);
};

// Soft-margin C-SVM dual on a precomputed Gram matrix, solved by SMO with
// second-order working-set selection. Stops when the maximal KKT violation is
// <= tol. Throws std::invalid_argument for a non-square or non-symmetric K.
SvmModel train_svm_precomputed(const MatrixD &K, std::span<const int> y,
                               const SvmConfig &config = {});

// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij, with
// labels in {0,1}.
double svm_dual_objective(const MatrixD &K, std::span<const int> y,
                          std::span<const double> alpha);

// Sub-matrix K[rows, cols].
MatrixD kernel_submatrix(const MatrixD &K, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols);

}  // namespace pestgraph

#endif  // PESTGRAPH_SVM_H_
