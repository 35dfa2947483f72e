//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pestgraph {
namespace {

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b)
    throw std::invalid_argument("metric inputs differ in length");
}

}  // namespace

Confusion confusion_matrix(std::span<const int> truth,
                           std::span<const int> predicted) {
  check_lengths(truth.size(), predicted.size());
  Confusion c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool t = truth[i] != 0, p = predicted[i] != 0;
    if (t && p)
      ++c.tp;
    else if (!t && p)
      ++c.fp;
    else if (!t && !p)
      ++c.tn;
    else
      ++c.fn;
  }
  return c;
}

double mcc(const Confusion &c) {
  if (c.tp < 0 || c.fp < 0 || c.tn < 0 || c.fn < 0)
    throw std::invalid_argument("negative confusion count");
  const double tp = c.tp, fp = c.fp, tn = c.tn, fn = c.fn;
  const double a = tp + fp, b = tp + fn, d = tn + fp, e = tn + fn;
  if (a == 0 || b == 0 || d == 0 || e == 0)
    return 0.0;
  return (tp * tn - fp * fn) / (std::sqrt(a) * std::sqrt(b) * std::sqrt(d) *
                                std::sqrt(e));
}

double mcc(std::span<const int> truth, std::span<const int> predicted) {
  return mcc(confusion_matrix(truth, predicted));
}

double auroc(std::span<const double> scores, std::span<const int> labels) {
  check_lengths(scores.size(), labels.size());
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });

  double pos = 0, rank_sum = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]])
      ++j;
    // 1-based midrank of the tied block [i, j).
    const double midrank = 0.5 * (static_cast<double>(i + 1) + j);
    for (std::size_t k = i; k < j; ++k)
      if (labels[order[k]] != 0) {
        rank_sum += midrank;
        pos += 1;
      }
    i = j;
  }
  const double neg = static_cast<double>(n) - pos;
  if (pos == 0 || neg == 0)
    throw std::invalid_argument("AUROC needs both classes");
  return (rank_sum - pos * (pos + 1) / 2.0) / (pos * neg);
}

double accuracy(std::span<const int> truth, std::span<const int> predicted) {
  check_lengths(truth.size(), predicted.size());
  if (truth.empty())
    return 0.0;
  std::size_t ok = 0;
  for (std::size_t i = 0; i < truth.size(); ++i)
    ok += (truth[i] != 0) == (predicted[i] != 0);
  return static_cast<double>(ok) / truth.size();
}

}  // namespace pestgraph
