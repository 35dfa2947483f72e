//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_FOREST_H_
#define PESTGRAPH_FOREST_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pestgraph/matrix.h"
#include "pestgraph/tabular.h"

namespace pestgraph {

struct ForestConfig {
  int n_trees = 500;
  int max_depth = 0;     // <= 0: unlimited
  int min_leaf = 1;
  int max_features = 0;  // <= 0: ceil(sqrt(d))
  bool bootstrap = true;
  bool class_weight = false;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct TreeNode {
  int feature = -1;  // -1 for leaves
  double threshold = 0.0;  // go left when x[feature] <= threshold
  int left = -1;
  int right = -1;
  double p_positive = 0.0;  // weighted positive fraction at this node
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double predict_proba(std::span<const double> x) const;
  int depth() const;  // a lone leaf has depth 0
};

struct ForestModel {
  std::vector<DecisionTree> trees;
  ForestConfig config;
  std::size_t n_features = 0;
  // Out-of-bag positive probability per training row; NaN when the row was
  // in every bootstrap sample (or bootstrap is off).
  std::vector<double> oob_proba;

  // Mean of per-tree leaf positive frequencies.
  double predict_proba(std::span<const double> x) const;
  // Majority vote of trees (leaf p > 0.5); exact ties fall back to the mean
  // probability.
  int predict(std::span<const double> x) const;

  std::vector<double> predict_proba(const MatrixD &X) const;
  std::vector<int> predict(const MatrixD &X) const;

  std::string to_json() const;
  static ForestModel from_json(const std::string &text);
};

// CART trees with Gini impurity on bootstrap samples. Tree t draws all its
// randomness from derive_seed(config.seed, t), so results do not depend on
// the thread count.
ForestModel train_random_forest(const TabularDataset &data,
                                const ForestConfig &config = {});

}  // namespace pestgraph

#endif  // PESTGRAPH_FOREST_H_
