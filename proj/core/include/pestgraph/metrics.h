//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_METRICS_H_
#define PESTGRAPH_METRICS_H_

#include <cstdint>
#include <span>

namespace pestgraph {

struct Confusion {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t tn = 0;
  std::int64_t fn = 0;

  std::int64_t total() const { return tp + fp + tn + fn; }
  friend bool operator==(const Confusion &, const Confusion &) = default;
};

Confusion confusion_matrix(std::span<const int> truth,
                           std::span<const int> predicted);

// Matthews correlation; 0 when any marginal is zero.
double mcc(const Confusion &c);
double mcc(std::span<const int> truth, std::span<const int> predicted);

// Mann-Whitney AUROC with midranks for ties. Throws std::invalid_argument
// unless both classes are present.
double auroc(std::span<const double> scores, std::span<const int> labels);

double accuracy(std::span<const int> truth, std::span<const int> predicted);

}  // namespace pestgraph

#endif  // PESTGRAPH_METRICS_H_
