//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_LOGREG_H_
#define PESTGRAPH_LOGREG_H_

#include <span>
#include <string>
#include <vector>

#include "pestgraph/matrix.h"
#include "pestgraph/tabular.h"

namespace pestgraph {

struct LogRegConfig {
  double l2 = 1.0;
  int max_iter = 1000;
  double tol = 1e-6;
  bool class_weight = false;
};

// Column standardization fitted on training data. Constant columns get scale
// 0 so they standardize to exactly 0.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> inv_std;

  static Standardizer fit(const MatrixD &X);
  MatrixD apply(const MatrixD &X) const;
  void apply_row(std::span<const double> x, std::span<double> out) const;
};

// Weighted mean log-loss + (l2/2)||w||^2 over already-standardized Z.
// params = (w_0..w_{d-1}, b); the bias is not regularized. Fills `grad`
// (same length as params) when non-empty.
double logreg_objective(const MatrixD &Z, std::span<const int> y,
                        std::span<const double> sample_weight, double l2,
                        std::span<const double> params,
                        std::span<double> grad = {});

struct LogisticModel {
  Standardizer scaler;
  std::vector<double> weights;  // in standardized space
  double bias = 0.0;
  LogRegConfig config;
  int iterations = 0;
  bool converged = false;
  double gradient_norm = 0.0;

  double decision(std::span<const double> x) const;
  double probability(std::span<const double> x) const;
  std::vector<double> decision(const MatrixD &X) const;
  std::vector<double> probability(const MatrixD &X) const;
  std::vector<int> predict(const MatrixD &X) const;

  std::string to_json() const;
  static LogisticModel from_json(const std::string &text);
};

// Full-batch gradient descent with Armijo backtracking.
LogisticModel train_logreg(const TabularDataset &data,
                           const LogRegConfig &config = {});

}  // namespace pestgraph

#endif  // PESTGRAPH_LOGREG_H_
