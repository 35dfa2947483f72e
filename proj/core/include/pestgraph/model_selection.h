//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_MODEL_SELECTION_H_
#define PESTGRAPH_MODEL_SELECTION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pestgraph/forest.h"
#include "pestgraph/logreg.h"
#include "pestgraph/matrix.h"
#include "pestgraph/svm.h"
#include "pestgraph/tabular.h"

namespace pestgraph {

using ParamSet = std::map<std::string, double>;
using GridAxis = std::pair<std::string, std::vector<double>>;

// Cartesian product; the first axis varies slowest. An empty axis list yields
// one empty ParamSet.
std::vector<ParamSet> expand_grid(const std::vector<GridAxis> &axes);

std::string param_set_to_string(const ParamSet &p);

// Fold index in [0, folds) per element of y: each class is shuffled with the
// seed and dealt round-robin. Throws std::invalid_argument if folds < 2 or a
// present class has fewer than `folds` members.
std::vector<int> stratified_kfold(std::span<const int> y, int folds,
                                  std::uint64_t seed);

struct Predictions {
  std::vector<double> scores;  // larger = more positive
  std::vector<int> labels;
};

// Fits on `train` rows and predicts `eval` rows (indices into the caller's
// dataset).
using FitPredict = std::function<Predictions(
    const ParamSet &params, std::span<const std::size_t> train,
    std::span<const std::size_t> eval)>;

// Higher is better.
using CvMetric = std::function<double(std::span<const int> truth,
                                      const Predictions &pred)>;

CvMetric mcc_metric();

struct CvRow {
  std::size_t config = 0;
  int fold = 0;
  double score = 0.0;
};

struct GridSearchResult {
  std::size_t best_index = 0;
  ParamSet best;
  std::vector<double> mean_scores;  // per grid point
  std::vector<CvRow> table;         // |grid| * folds rows, config-major
};

// Stratified k-fold CV over `rows` of a dataset with labels `y` (indexed by
// dataset row). Picks the highest mean score; ties go to the earlier config.
GridSearchResult grid_search_cv(std::span<const int> y,
                                std::span<const std::size_t> rows,
                                const std::vector<ParamSet> &grid,
                                const FitPredict &fit_predict,
                                const CvMetric &metric, int folds,
                                std::uint64_t seed);

// Model families over a fixed dataset. Recognized parameters:
//   forest: n_trees, max_depth, min_leaf, max_features
//   logreg: l2, max_iter, tol
//   svm: C, tol
FitPredict forest_family(const TabularDataset &data, ForestConfig base);
FitPredict logreg_family(const TabularDataset &data, LogRegConfig base);
FitPredict svm_family(const MatrixD &K, std::span<const int> y,
                      SvmConfig base);

ForestConfig apply_params(ForestConfig c, const ParamSet &p);
LogRegConfig apply_params(LogRegConfig c, const ParamSet &p);
SvmConfig apply_params(SvmConfig c, const ParamSet &p);

}  // namespace pestgraph

#endif  // PESTGRAPH_MODEL_SELECTION_H_
