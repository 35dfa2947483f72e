//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pestgraph/logreg.h"
#include "pestgraph/metrics.h"
#include "pestgraph/model_selection.h"
#include "pestgraph/rng.h"

namespace pestgraph {
namespace {

TEST(Grid, ExpandsFirstAxisSlowest) {
  const auto g = expand_grid({ { "a", { 1, 2 } }, { "b", { 10, 20, 30 } } });
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g[0].at("a"), 1);
  EXPECT_EQ(g[0].at("b"), 10);
  EXPECT_EQ(g[1].at("b"), 20);
  EXPECT_EQ(g[3].at("a"), 2);
  EXPECT_EQ(expand_grid({}).size(), 1u);
  EXPECT_EQ(param_set_to_string({}), "default");
}

TEST(Kfold, StratifiedAndDeterministic) {
  std::vector<int> y(50, 0);
  for (int i = 0; i < 15; ++i)
    y[i] = 1;
  const auto f = stratified_kfold(y, 5, 3);
  EXPECT_EQ(f, stratified_kfold(y, 5, 3));
  for (int k = 0; k < 5; ++k) {
    int pos = 0, all = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (f[i] == k) {
        ++all;
        pos += y[i];
      }
    EXPECT_EQ(all, 10);
    EXPECT_EQ(pos, 3);
  }
  EXPECT_THROW(stratified_kfold(y, 1, 0), std::invalid_argument);
  EXPECT_THROW(stratified_kfold(std::vector<int> { 0, 0, 1 }, 2, 0),
               std::invalid_argument);
}

// Fit-predict that ignores the data: score = param "q" for one planted row
// set. Used for bookkeeping tests.
Predictions constant_predictions(std::size_t n, int label) {
  return { std::vector<double>(n, label), std::vector<int>(n, label) };
}

TEST(GridSearch, SinglePointReturnsIt) {
  std::vector<int> y = { 0, 1, 0, 1, 0, 1 };
  std::vector<std::size_t> rows(6);
  std::iota(rows.begin(), rows.end(), 0);
  const std::vector<ParamSet> grid = { { { "C", 3.0 } } };
  const auto r = grid_search_cv(
      y, rows, grid,
      [&](const ParamSet &, std::span<const std::size_t>, std::span<const std::size_t> e) {
        return constant_predictions(e.size(), 1);
      },
      mcc_metric(), 2, 0);
  EXPECT_EQ(r.best_index, 0u);
  EXPECT_EQ(r.best, grid[0]);
  EXPECT_EQ(r.table.size(), 2u);
}

TEST(GridSearch, TableHasGridTimesFoldsRows) {
  std::vector<int> y(30);
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = i % 3 == 0;
  std::vector<std::size_t> rows(30);
  std::iota(rows.begin(), rows.end(), 0);
  const auto grid = expand_grid({ { "x", { 1, 2, 3 } }, { "z", { 0, 1 } } });
  const auto r = grid_search_cv(
      y, rows, grid,
      [&](const ParamSet &, std::span<const std::size_t>, std::span<const std::size_t> e) {
        return constant_predictions(e.size(), 0);
      },
      mcc_metric(), 4, 1);
  EXPECT_EQ(r.table.size(), grid.size() * 4);
  EXPECT_EQ(r.mean_scores.size(), grid.size());
}

TEST(GridSearch, PlantedSignalMatchesManualCv) {
  // feature 0 carries the label; feature 1 is noise. Logistic regression with
  // tiny l2 should beat the over-regularized configurations.
  SplitMix64 rng(44);
  const std::size_t n = 90;
  TabularDataset data;
  data.X = MatrixD(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = rng.below(10) < 4;
    data.y.push_back(label);
    data.X(i, 0) = (label ? 1.0 : -1.0) + 0.7 * rng.normal();
    data.X(i, 1) = rng.normal();
    data.ids.push_back(std::to_string(i));
  }
  // use a subset of rows to check index mapping
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < n; ++i)
    if (i % 9 != 4)
      rows.push_back(i);
  const auto grid = expand_grid({ { "l2", { 1e3, 1e-3, 1e6 } } });
  const int folds = 3;
  const std::uint64_t seed = 12;
  const auto r = grid_search_cv(data.y, rows, grid, logreg_family(data, {}),
                                mcc_metric(), folds, seed);

  // External recomputation of the same folds.
  std::vector<int> sub_y;
  for (std::size_t row: rows)
    sub_y.push_back(data.y[row]);
  const auto fold_of = stratified_kfold(sub_y, folds, seed);
  std::vector<double> manual(grid.size(), 0.0);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (int k = 0; k < folds; ++k) {
      std::vector<std::size_t> tr, ev;
      for (std::size_t p = 0; p < rows.size(); ++p)
        (fold_of[p] == k ? ev : tr).push_back(rows[p]);
      const auto model =
          train_logreg(data.subset(tr), apply_params(LogRegConfig {}, grid[g]));
      std::vector<int> truth;
      for (std::size_t row: ev)
        truth.push_back(data.y[row]);
      manual[g] += mcc(truth, model.predict(data.subset(ev).X)) / folds;
    }
    EXPECT_NEAR(r.mean_scores[g], manual[g], 1e-12);
  }
  const auto best = static_cast<std::size_t>(
      std::max_element(manual.begin(), manual.end()) - manual.begin());
  EXPECT_EQ(r.best_index, best);
  EXPECT_EQ(r.best.at("l2"), 1e-3);
}

TEST(Params, UnknownKeysRejected) {
  EXPECT_THROW(apply_params(ForestConfig {}, { { "gamma", 1 } }), std::invalid_argument);
  EXPECT_THROW(apply_params(SvmConfig {}, { { "l2", 1 } }), std::invalid_argument);
  EXPECT_EQ(apply_params(ForestConfig {}, { { "n_trees", 7 } }).n_trees, 7);
  EXPECT_EQ(apply_params(SvmConfig {}, { { "C", 0.1 } }).C, 0.1);
}

}  // namespace
}  // namespace pestgraph
