//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/split.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "pestgraph/canonical.h"
#include "pestgraph/csv.h"
#include "pestgraph/parallel.h"
#include "pestgraph/rng.h"

namespace pestgraph {
namespace {

SplitAssignment from_test_rows(std::string method, double fraction,
                               std::optional<std::uint64_t> seed,
                               std::vector<std::size_t> test, std::size_t n,
                               std::span<const std::string> ids) {
  SplitAssignment s;
  s.method = std::move(method);
  s.test_fraction = fraction;
  s.seed = seed;
  std::vector<bool> is_test(n, false);
  for (auto r: test)
    is_test[r] = true;
  for (std::size_t i = 0; i < n; ++i) {
    (is_test[i] ? s.test_rows : s.train_rows).push_back(i);
    if (!ids.empty())
      (is_test[i] ? s.test_ids : s.train_ids).push_back(ids[i]);
  }
  return s;
}

void check_ids(std::span<const std::string> ids, std::size_t n) {
  if (!ids.empty() && ids.size() != n)
    throw std::invalid_argument("id count does not match dataset size");
}

}  // namespace

std::string SplitAssignment::tag() const {
  std::string t = method;
  if (seed)
    t += ":seed=" + std::to_string(*seed);
  return t;
}

std::size_t test_size(std::size_t n, double fraction) {
  if (n == 0)
    throw std::invalid_argument("empty dataset");
  if (n < 2)
    throw std::invalid_argument("splitting needs at least 2 items");
  if (!(fraction > 0.0 && fraction < 1.0))
    throw std::invalid_argument("test fraction must be in (0, 1)");
  auto k = static_cast<std::size_t>(std::llround(fraction * n));
  return std::clamp<std::size_t>(k, 1, n - 1);
}

void check_partition(const SplitAssignment &s, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (auto *rows: { &s.train_rows, &s.test_rows })
    for (auto r: *rows) {
      if (r >= n)
        throw std::logic_error("split row out of range");
      if (seen[r]++)
        throw std::logic_error("split row assigned twice");
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw std::logic_error("split does not cover every row");
}

std::vector<std::size_t> maxmin_pick(
    std::size_t n, std::size_t k, std::size_t first,
    const std::function<double(std::size_t, std::size_t)> &distance) {
  if (k > n || first >= n)
    throw std::invalid_argument("invalid maxmin pick request");
  std::vector<std::size_t> picks;
  if (k == 0)
    return picks;
  std::vector<double> min_d(n, std::numeric_limits<double>::infinity());
  std::vector<bool> picked(n, false);
  std::size_t next = first;
  while (true) {
    picks.push_back(next);
    picked[next] = true;
    if (picks.size() == k)
      break;
    for (std::size_t i = 0; i < n; ++i)
      if (!picked[i])
        min_d[i] = std::min(min_d[i], distance(next, i));
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!picked[i] && (best == n || min_d[i] > min_d[best]))
        best = i;
    next = best;
  }
  return picks;
}

SplitAssignment maxmin_split(std::span<const FingerprintVector> fps,
                             std::span<const std::string> ids,
                             double test_fraction, std::uint64_t seed,
                             int threads) {
  const std::size_t n = fps.size();
  check_ids(ids, n);
  const std::size_t k = test_size(n, test_fraction);
  SplitMix64 rng(seed);
  const std::size_t first = rng.below(n);

  // Same greedy rule as maxmin_pick, with each step's distance row computed
  // in parallel.
  std::vector<double> min_d(n, std::numeric_limits<double>::infinity());
  std::vector<bool> picked(n, false);
  std::vector<std::size_t> order;
  std::size_t next = first;
  while (true) {
    order.push_back(next);
    picked[next] = true;
    if (order.size() == k)
      break;
    parallel_for(n, threads, [&](std::size_t i) {
      if (!picked[i])
        min_d[i] = std::min(min_d[i], 1.0 - tanimoto(fps[next], fps[i]));
    });
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!picked[i] && (best == n || min_d[i] > min_d[best]))
        best = i;
    next = best;
  }
  auto s = from_test_rows("maxmin", test_fraction, seed, order, n, ids);
  s.pick_order = std::move(order);
  return s;
}

SplitAssignment maxmin_split(const MoleculeSet &set, double test_fraction,
                             std::uint64_t seed, const MaxMinOptions &opts) {
  std::vector<FingerprintVector> fps(set.size());
  parallel_for(set.size(), opts.threads, [&](std::size_t i) {
    fps[i] = ecfp(set.records[i].mol, opts.radius, opts.n_bits, false);
  });
  const auto ids = set.ids();
  return maxmin_split(fps, ids, test_fraction, seed, opts.threads);
}

SplitAssignment time_split(std::span<const int> years,
                           std::span<const std::string> keys,
                           std::span<const std::string> ids,
                           double test_fraction) {
  const std::size_t n = years.size();
  if (keys.size() != n)
    throw std::invalid_argument("year and key counts differ");
  check_ids(ids, n);
  const std::size_t k = test_size(n, test_fraction);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (years[a] != years[b])
      return years[a] > years[b];
    if (keys[a] != keys[b])
      return keys[a] > keys[b];
    if (!ids.empty() && ids[a] != ids[b])
      return ids[a] > ids[b];
    return a < b;
  });
  order.resize(k);
  return from_test_rows("time", test_fraction, std::nullopt, order, n, ids);
}

SplitAssignment time_split(const MoleculeSet &set, double test_fraction) {
  std::vector<int> years;
  std::vector<std::string> keys;
  for (const auto &r: set.records) {
    if (!r.year)
      throw std::invalid_argument("record '" + r.id +
                                  "' has no year; time split impossible");
    years.push_back(*r.year);
    keys.push_back(canonical_smiles(r.mol));
  }
  const auto ids = set.ids();
  return time_split(years, keys, ids, test_fraction);
}

SplitAssignment stratified_random_split(std::span<const int> labels,
                                        std::span<const std::string> ids,
                                        double test_fraction,
                                        std::uint64_t seed) {
  const std::size_t n = labels.size();
  check_ids(ids, n);
  test_size(n, test_fraction);  // argument validation
  SplitMix64 rng(seed);
  std::vector<std::size_t> test;
  for (int cls: { 0, 1 }) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if ((labels[i] != 0) == (cls == 1))
        members.push_back(i);
    if (members.size() < 2)
      throw std::invalid_argument("class " + std::to_string(cls) + " has " +
                                  std::to_string(members.size()) +
                                  " members; stratified split needs >= 2");
    rng.shuffle(members);
    const std::size_t k = test_size(members.size(), test_fraction);
    test.insert(test.end(), members.begin(),
                members.begin() + static_cast<long>(k));
  }
  return from_test_rows("random", test_fraction, seed, test, n, ids);
}

SplitAssignment stratified_random_split(const MoleculeSet &set,
                                        double test_fraction,
                                        std::uint64_t seed) {
  if (!set.has_labels())
    throw std::invalid_argument("stratified split needs labels");
  const auto labels = set.labels();
  const auto ids = set.ids();
  return stratified_random_split(labels, ids, test_fraction, seed);
}

std::string split_to_csv(const SplitAssignment &s,
                         std::span<const std::string> ids) {
  const std::size_t n = s.train_rows.size() + s.test_rows.size();
  check_ids(ids, n);
  std::vector<const char *> subset(n, "train");
  for (auto r: s.test_rows)
    subset[r] = "test";
  std::string out = "id,subset\n";
  for (std::size_t i = 0; i < n; ++i)
    out += csv_escape(ids.empty() ? std::to_string(i) : ids[i]) + "," +
           subset[i] + "\n";
  return out;
}

std::string split_sidecar_json(const SplitAssignment &s) {
  nlohmann::ordered_json j;
  j["method"] = s.method;
  j["test_fraction"] = s.test_fraction;
  if (s.seed)
    j["seed"] = *s.seed;
  else
    j["seed"] = nullptr;
  j["n_train"] = s.train_rows.size();
  j["n_test"] = s.test_rows.size();
  if (!s.pick_order.empty())
    j["pick_order"] = s.pick_order;
  return j.dump(2) + "\n";
}

}  // namespace pestgraph
