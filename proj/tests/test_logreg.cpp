//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "pestgraph/logreg.h"
#include "pestgraph/metrics.h"
#include "pestgraph/rng.h"

namespace pestgraph {
namespace {

TabularDataset random_dataset(SplitMix64 &rng, std::size_t n, std::size_t d) {
  TabularDataset data;
  data.X = MatrixD(n, d);
  for (double &x: data.X.data())
    x = rng.normal();
  for (std::size_t i = 0; i < n; ++i) {
    data.y.push_back(static_cast<int>(rng.below(2)));
    data.ids.push_back("r" + std::to_string(i));
  }
  data.y[0] = 0;
  data.y[1] = 1;
  return data;
}

TEST(LogReg, GradientMatchesCentralDifferences) {
  SplitMix64 rng(50);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 5 + rng.below(20), d = 1 + rng.below(6);
    const TabularDataset data = random_dataset(rng, n, d);
    std::vector<double> sw(n);
    for (double &w: sw)
      w = 0.5 + rng.uniform();
    const double l2 = rng.uniform() * 2.0;
    std::vector<double> params(d + 1), grad(d + 1);
    for (double &p: params)
      p = rng.normal();
    logreg_objective(data.X, data.y, sw, l2, params, grad);
    for (std::size_t k = 0; k <= d; ++k) {
      const double h = 1e-5;
      auto plus = params, minus = params;
      plus[k] += h;
      minus[k] -= h;
      const double fd = (logreg_objective(data.X, data.y, sw, l2, plus) -
                         logreg_objective(data.X, data.y, sw, l2, minus)) /
                        (2 * h);
      EXPECT_LE(std::abs(fd - grad[k]), 1e-5 * std::max(1.0, std::abs(grad[k])))
          << "instance " << t << " coord " << k;
    }
  }
}

TEST(LogReg, SeparableToyIsFitExactly) {
  TabularDataset data;
  data.X = MatrixD(8, 2);
  const double pts[8][2] = { { 0, 0 }, { 0, 1 }, { 1, 0 }, { 0.5, 0.2 },
                             { 3, 3 }, { 3, 4 }, { 4, 3 }, { 3.5, 3.8 } };
  for (int i = 0; i < 8; ++i) {
    data.X(i, 0) = pts[i][0];
    data.X(i, 1) = pts[i][1];
    data.y.push_back(i >= 4);
    data.ids.push_back(std::to_string(i));
  }
  const auto model = train_logreg(data, { .l2 = 1e-6 });
  EXPECT_DOUBLE_EQ(accuracy(data.y, model.predict(data.X)), 1.0);
}

TEST(LogReg, HeavyRegularizationGivesPrior) {
  SplitMix64 rng(3);
  TabularDataset data = random_dataset(rng, 40, 3);
  for (std::size_t i = 0; i < 40; ++i)
    data.y[i] = i < 30 ? 1 : 0;
  const auto model = train_logreg(data, { .l2 = 1e8 });
  for (double w: model.weights)
    EXPECT_NEAR(w, 0.0, 1e-6);
  for (double p: model.probability(data.X))
    EXPECT_NEAR(p, 0.75, 1e-4);
}

TEST(LogReg, ConstantColumnIsHarmless) {
  SplitMix64 rng(4);
  TabularDataset data = random_dataset(rng, 30, 3);
  for (std::size_t i = 0; i < 30; ++i)
    data.X(i, 1) = 5.0;
  const auto model = train_logreg(data);
  EXPECT_TRUE(model.converged);
  EXPECT_EQ(model.weights[1], 0.0);
}

TEST(LogReg, JsonRoundTripPreservesPredictions) {
  SplitMix64 rng(5);
  const TabularDataset data = random_dataset(rng, 25, 4);
  const auto model = train_logreg(data, { .l2 = 0.5, .class_weight = true });
  const auto copy = LogisticModel::from_json(model.to_json());
  EXPECT_EQ(copy.probability(data.X), model.probability(data.X));
  EXPECT_EQ(copy.to_json(), model.to_json());
}

TEST(LogReg, RejectsSingleClass) {
  SplitMix64 rng(6);
  TabularDataset data = random_dataset(rng, 10, 2);
  for (int &y: data.y)
    y = 1;
  EXPECT_THROW(train_logreg(data), DegenerateLabels);
}

TEST(Tabular, ClassWeightsAndSubset) {
  const std::vector<int> y = { 1, 0, 0, 0 };
  const auto w = class_sample_weights(y, true);
  EXPECT_DOUBLE_EQ(w[0], 2.0);
  EXPECT_DOUBLE_EQ(w[1], 4.0 / 6.0);
  EXPECT_EQ(class_sample_weights(y, false), (std::vector<double>(4, 1.0)));

  TabularDataset data;
  data.X = stack_rows({ { 1, 2 }, { 3, 4 }, { 5, 6 } });
  data.y = { 0, 1, 0 };
  data.ids = { "a", "b", "c" };
  const std::vector<std::size_t> rows = { 2, 0 };
  const auto sub = data.subset(rows);
  EXPECT_EQ(sub.ids, (std::vector<std::string> { "c", "a" }));
  EXPECT_EQ(sub.X(0, 1), 6.0);
  data.X(1, 0) = std::nan("");
  EXPECT_THROW(data.validate(false), std::invalid_argument);
}

}  // namespace
}  // namespace pestgraph
