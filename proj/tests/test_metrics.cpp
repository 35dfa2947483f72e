//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.h"
#include "pestgraph/metrics.h"
#include "pestgraph/rng.h"

namespace pestgraph {
namespace {

TEST(Mcc, PerfectPrediction) {
  EXPECT_DOUBLE_EQ(mcc(Confusion { .tp = 7, .fp = 0, .tn = 5, .fn = 0 }), 1.0);
}

TEST(Mcc, AllPositivePredictionIsZero) {
  const std::vector<int> truth = { 1, 0, 1, 0, 0 }, pred = { 1, 1, 1, 1, 1 };
  EXPECT_EQ(mcc(truth, pred), 0.0);
}

TEST(Mcc, WorkedExample) {
  const Confusion c { .tp = 40, .fp = 5, .tn = 45, .fn = 10 };
  const double direct = (40.0 * 45.0 - 5.0 * 10.0) /
                        std::sqrt(45.0 * 50.0 * 50.0 * 55.0);
  EXPECT_NEAR(mcc(c), direct, 1e-15);
}

TEST(Mcc, RandomConfusionsMatchDirectFormula) {
  SplitMix64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    Confusion c;
    c.tp = static_cast<std::int64_t>(rng.below(500));
    c.fp = static_cast<std::int64_t>(rng.below(500));
    c.tn = static_cast<std::int64_t>(rng.below(500));
    c.fn = static_cast<std::int64_t>(rng.below(500));
    if (t % 10 == 0)
      c.fp = 0;
    EXPECT_NEAR(mcc(c), oracle::mcc_direct(c.tp, c.fp, c.tn, c.fn), 1e-12);
  }
}

TEST(Confusion, CountsAndValidation) {
  const std::vector<int> truth = { 1, 1, 0, 0, 1 }, pred = { 1, 0, 0, 1, 1 };
  const Confusion c = confusion_matrix(truth, pred);
  EXPECT_EQ(c, (Confusion { .tp = 2, .fp = 1, .tn = 1, .fn = 1 }));
  EXPECT_DOUBLE_EQ(accuracy(truth, pred), 0.6);
  const std::vector<int> shorter = { 1 };
  EXPECT_THROW(confusion_matrix(truth, shorter), std::invalid_argument);
}

TEST(Auroc, PerfectAndConstant) {
  const std::vector<int> labels = { 0, 0, 1, 1 };
  EXPECT_DOUBLE_EQ(auroc(std::vector<double> { 0.1, 0.2, 0.8, 0.9 }, labels), 1.0);
  EXPECT_DOUBLE_EQ(auroc(std::vector<double> { 0.5, 0.5, 0.5, 0.5 }, labels), 0.5);
  EXPECT_THROW(auroc(std::vector<double> { 1, 2 }, std::vector<int> { 1, 1 }),
               std::invalid_argument);
}

TEST(Auroc, RandomSetsMatchPairCounting) {
  SplitMix64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 10 + rng.below(60);
    std::vector<double> s(n);
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = static_cast<double>(rng.below(12)) / 4.0;  // plenty of ties
      y[i] = static_cast<int>(rng.below(2));
    }
    y[0] = 0;
    y[1] = 1;
    EXPECT_NEAR(auroc(s, y), oracle::auroc_pairs(s, y), 1e-12);
  }
}

}  // namespace
}  // namespace pestgraph
