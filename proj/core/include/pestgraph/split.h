//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_SPLIT_H_
#define PESTGRAPH_SPLIT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pestgraph/fingerprints.h"
#include "pestgraph/molset.h"

namespace pestgraph {

struct SplitAssignment {
  std::string method;  // "maxmin", "time", "random"
  double test_fraction = 0.0;
  std::optional<std::uint64_t> seed;
  std::vector<std::size_t> train_rows;  // ascending dataset indices
  std::vector<std::size_t> test_rows;   // ascending dataset indices
  std::vector<std::size_t> pick_order;  // maxmin only: test rows as picked
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;

  std::string tag() const;
};

// round(fraction * n) clamped to [1, n - 1]. Throws unless 0 < fraction < 1
// and n >= 2.
std::size_t test_size(std::size_t n, double fraction);

// Throws std::logic_error unless train/test partition [0, n).
void check_partition(const SplitAssignment &s, std::size_t n);

// Greedy maximin picking of k items. `first` is picked first; each next pick
// maximizes the minimum distance to the picked set, ties to the lowest index.
std::vector<std::size_t> maxmin_pick(
    std::size_t n, std::size_t k, std::size_t first,
    const std::function<double(std::size_t, std::size_t)> &distance);

struct MaxMinOptions {
  int radius = 2;
  std::uint32_t n_bits = 2048;
  int threads = 1;
};

// MaxMin over 1 - Tanimoto of binary fingerprints; the first pick is drawn
// from SplitMix64(seed).
SplitAssignment maxmin_split(std::span<const FingerprintVector> fps,
                             std::span<const std::string> ids,
                             double test_fraction, std::uint64_t seed,
                             int threads = 1);
SplitAssignment maxmin_split(const MoleculeSet &set, double test_fraction,
                             std::uint64_t seed, const MaxMinOptions &opts = {});

// Newest items to test: order by year descending, then key (canonical SMILES)
// descending, then id descending; the first test_size() items are the test
// set.
SplitAssignment time_split(std::span<const int> years,
                           std::span<const std::string> keys,
                           std::span<const std::string> ids,
                           double test_fraction);
SplitAssignment time_split(const MoleculeSet &set, double test_fraction);

// Per-class seeded shuffle; class c contributes round(fraction * n_c) test
// items (at least 1, leaving at least 1 in train). Each class needs >= 2
// members.
SplitAssignment stratified_random_split(std::span<const int> labels,
                                        std::span<const std::string> ids,
                                        double test_fraction,
                                        std::uint64_t seed);
SplitAssignment stratified_random_split(const MoleculeSet &set,
                                        double test_fraction,
                                        std::uint64_t seed);

// `id,subset` rows in dataset order, subset is "train" or "test".
std::string split_to_csv(const SplitAssignment &s,
                         std::span<const std::string> ids);
std::string split_sidecar_json(const SplitAssignment &s);

}  // namespace pestgraph

#endif  // PESTGRAPH_SPLIT_H_
