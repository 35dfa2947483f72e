//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/forest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "pestgraph/parallel.h"
#include "pestgraph/rng.h"

namespace pestgraph {
namespace {

constexpr int kModelVersion = 1;

// Column-major copy of X so per-feature scans are contiguous.
struct Columns {
  std::size_t n = 0, d = 0;
  std::vector<double> data;

  explicit Columns(const MatrixD &X): n(X.rows()), d(X.cols()), data(n * d) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j)
        data[j * n + i] = X(i, j);
  }
  double at(std::size_t row, std::size_t col) const {
    return data[col * n + row];
  }
};

double gini_mass(double w, double pos) {
  if (w <= 0)
    return 0.0;
  const double p = pos / w;
  return w * 2.0 * p * (1.0 - p);
}

struct SplitChoice {
  int feature = -1;
  double threshold = 0.0;
  double score = std::numeric_limits<double>::infinity();
};

class TreeBuilder {
public:
  TreeBuilder(const Columns &cols, std::span<const int> y,
              std::span<const double> weight, const ForestConfig &config,
              std::size_t mtry, std::uint64_t seed)
      : cols_(cols), y_(y), w_(weight), config_(config), mtry_(mtry),
        rng_(seed), perm_(cols.d) {
    std::iota(perm_.begin(), perm_.end(), 0);
  }

  DecisionTree build(std::vector<std::size_t> rows) {
    tree_.nodes.clear();
    rows_ = std::move(rows);
    grow(0, rows_.size(), 0);
    return std::move(tree_);
  }

private:
  int grow(std::size_t begin, std::size_t end, int depth) {
    double w = 0, pos = 0;
    for (std::size_t k = begin; k < end; ++k) {
      w += w_[rows_[k]];
      pos += y_[rows_[k]] ? w_[rows_[k]] : 0.0;
    }
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back({});
    tree_.nodes[id].p_positive = w > 0 ? pos / w : 0.0;

    const std::size_t count = end - begin;
    const bool pure = pos <= 0.0 || pos >= w;
    const bool depth_limited = config_.max_depth > 0 && depth >= config_.max_depth;
    const auto min_leaf = static_cast<std::size_t>(std::max(1, config_.min_leaf));
    if (pure || depth_limited || count < 2 * min_leaf)
      return id;

    const SplitChoice split = best_split(begin, end, w, pos, min_leaf);
    if (split.feature < 0)
      return id;

    const auto f = static_cast<std::size_t>(split.feature);
    auto mid_it = std::stable_partition(
        rows_.begin() + static_cast<long>(begin),
        rows_.begin() + static_cast<long>(end),
        [&](std::size_t r) { return cols_.at(r, f) <= split.threshold; });
    const auto mid = static_cast<std::size_t>(mid_it - rows_.begin());

    tree_.nodes[id].feature = split.feature;
    tree_.nodes[id].threshold = split.threshold;
    const int left = grow(begin, mid, depth + 1);
    const int right = grow(mid, end, depth + 1);
    tree_.nodes[id].left = left;
    tree_.nodes[id].right = right;
    return id;
  }

  // Draws features without replacement until mtry non-constant ones have been
  // evaluated (or all were tried), keeping the lowest weighted Gini.
  SplitChoice best_split(std::size_t begin, std::size_t end, double w_total,
                         double pos_total, std::size_t min_leaf) {
    SplitChoice best;
    const std::size_t d = cols_.d;
    std::size_t evaluated = 0;
    for (std::size_t k = 0; k < d && evaluated < mtry_; ++k) {
      const std::size_t pick = k + rng_.below(d - k);
      std::swap(perm_[k], perm_[pick]);
      const std::size_t f = perm_[k];

      const double first = cols_.at(rows_[begin], f);
      bool constant = true;
      for (std::size_t r = begin + 1; r < end && constant; ++r)
        constant = cols_.at(rows_[r], f) == first;
      if (constant)
        continue;
      ++evaluated;

      items_.clear();
      for (std::size_t r = begin; r < end; ++r)
        items_.push_back({ cols_.at(rows_[r], f), rows_[r] });
      std::sort(items_.begin(), items_.end());

      double wl = 0, pl = 0;
      for (std::size_t k2 = 0; k2 + 1 < items_.size(); ++k2) {
        const std::size_t row = items_[k2].second;
        wl += w_[row];
        pl += y_[row] ? w_[row] : 0.0;
        const double v = items_[k2].first, next = items_[k2 + 1].first;
        if (v == next)
          continue;
        const std::size_t n_left = k2 + 1, n_right = items_.size() - n_left;
        if (n_left < min_leaf || n_right < min_leaf)
          continue;
        const double score =
            gini_mass(wl, pl) + gini_mass(w_total - wl, pos_total - pl);
        if (score < best.score) {
          double thr = v + (next - v) / 2.0;
          if (!(thr >= v && thr < next))
            thr = v;
          best = { static_cast<int>(f), thr, score };
        }
      }
    }
    return best;
  }

  const Columns &cols_;
  std::span<const int> y_;
  std::span<const double> w_;
  const ForestConfig &config_;
  std::size_t mtry_;
  SplitMix64 rng_;
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> rows_;
  std::vector<std::pair<double, std::size_t>> items_;
  DecisionTree tree_;
};

}  // namespace

double DecisionTree::predict_proba(std::span<const double> x) const {
  int at = 0;
  while (nodes[at].feature >= 0) {
    const TreeNode &n = nodes[at];
    at = x[n.feature] <= n.threshold ? n.left : n.right;
  }
  return nodes[at].p_positive;
}

int DecisionTree::depth() const {
  if (nodes.empty())
    return 0;
  int best = 0;
  std::vector<std::pair<int, int>> stack { { 0, 0 } };
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (nodes[id].feature >= 0) {
      stack.push_back({ nodes[id].left, d + 1 });
      stack.push_back({ nodes[id].right, d + 1 });
    }
  }
  return best;
}

double ForestModel::predict_proba(std::span<const double> x) const {
  if (x.size() != n_features)
    throw std::invalid_argument("feature width " + std::to_string(x.size()) +
                                " != model width " +
                                std::to_string(n_features));
  double s = 0;
  for (const auto &t: trees)
    s += t.predict_proba(x);
  return trees.empty() ? 0.0 : s / static_cast<double>(trees.size());
}

int ForestModel::predict(std::span<const double> x) const {
  if (x.size() != n_features)
    throw std::invalid_argument("feature width mismatch");
  std::size_t votes = 0;
  double s = 0;
  for (const auto &t: trees) {
    const double p = t.predict_proba(x);
    votes += p > 0.5;
    s += p;
  }
  if (2 * votes != trees.size())
    return 2 * votes > trees.size();
  return s / static_cast<double>(trees.size()) > 0.5;
}

std::vector<double> ForestModel::predict_proba(const MatrixD &X) const {
  std::vector<double> out(X.rows());
  parallel_for(X.rows(), config.threads,
               [&](std::size_t i) { out[i] = predict_proba(X.row(i)); });
  return out;
}

std::vector<int> ForestModel::predict(const MatrixD &X) const {
  std::vector<int> out(X.rows());
  parallel_for(X.rows(), config.threads,
               [&](std::size_t i) { out[i] = predict(X.row(i)); });
  return out;
}

ForestModel train_random_forest(const TabularDataset &data,
                                const ForestConfig &config) {
  if (config.n_trees < 1)
    throw std::invalid_argument("n_trees must be >= 1");
  data.validate(true);
  const std::size_t n = data.size(), d = data.dim();
  if (d == 0)
    throw std::invalid_argument("random forest needs at least one feature");

  const std::size_t mtry =
      config.max_features > 0
          ? std::min<std::size_t>(static_cast<std::size_t>(config.max_features), d)
          : static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(d))));
  const Columns cols(data.X);
  const auto class_w = class_sample_weights(data.y, config.class_weight);

  ForestModel model;
  model.config = config;
  model.n_features = d;
  model.trees.resize(static_cast<std::size_t>(config.n_trees));
  std::vector<std::vector<int>> in_bag(model.trees.size());

  parallel_for(model.trees.size(), config.threads, [&](std::size_t t) {
    SplitMix64 rng(derive_seed(config.seed, t));
    std::vector<int> counts(n, 0);
    if (config.bootstrap) {
      for (std::size_t i = 0; i < n; ++i)
        ++counts[rng.below(n)];
    } else {
      std::fill(counts.begin(), counts.end(), 1);
    }
    std::vector<double> weight(n);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i) {
      weight[i] = counts[i] * class_w[i];
      if (counts[i] > 0)
        rows.push_back(i);
    }
    TreeBuilder builder(cols, data.y, weight, config, mtry, rng());
    model.trees[t] = builder.build(std::move(rows));
    in_bag[t] = std::move(counts);
  });

  model.oob_proba.assign(n, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    int k = 0;
    for (std::size_t t = 0; t < model.trees.size(); ++t)
      if (in_bag[t][i] == 0) {
        s += model.trees[t].predict_proba(data.X.row(i));
        ++k;
      }
    if (k > 0)
      model.oob_proba[i] = s / k;
  }
  return model;
}

std::string ForestModel::to_json() const {
  nlohmann::json j;
  j["model"] = "random_forest";
  j["version"] = kModelVersion;
  j["config"] = { { "n_trees", config.n_trees },
                  { "max_depth", config.max_depth },
                  { "min_leaf", config.min_leaf },
                  { "max_features", config.max_features },
                  { "bootstrap", config.bootstrap },
                  { "class_weight", config.class_weight },
                  { "seed", config.seed } };
  j["n_features"] = n_features;
  auto &arr = j["trees"] = nlohmann::json::array();
  for (const auto &t: trees) {
    auto nodes = nlohmann::json::array();
    for (const auto &nd: t.nodes)
      nodes.push_back({ nd.feature, nd.threshold, nd.left, nd.right,
                        nd.p_positive });
    arr.push_back(std::move(nodes));
  }
  return j.dump();
}

ForestModel ForestModel::from_json(const std::string &text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("model") != "random_forest" || j.at("version") != kModelVersion)
    throw std::invalid_argument("not a version-1 random_forest model");
  ForestModel m;
  const auto &c = j.at("config");
  m.config.n_trees = c.at("n_trees");
  m.config.max_depth = c.at("max_depth");
  m.config.min_leaf = c.at("min_leaf");
  m.config.max_features = c.at("max_features");
  m.config.bootstrap = c.at("bootstrap");
  m.config.class_weight = c.at("class_weight");
  m.config.seed = c.at("seed");
  m.n_features = j.at("n_features");
  for (const auto &tj: j.at("trees")) {
    DecisionTree t;
    for (const auto &nj: tj) {
      TreeNode nd;
      nd.feature = nj.at(0);
      nd.threshold = nj.at(1);
      nd.left = nj.at(2);
      nd.right = nj.at(3);
      nd.p_positive = nj.at(4);
      const int count = static_cast<int>(tj.size());
      if (nd.feature >= 0 &&
          (nd.left <= 0 || nd.right <= 0 || nd.left >= count ||
           nd.right >= count ||
           static_cast<std::size_t>(nd.feature) >= m.n_features))
        throw std::invalid_argument("corrupt tree node");
      t.nodes.push_back(nd);
    }
    if (t.nodes.empty())
      throw std::invalid_argument("empty tree in model");
    m.trees.push_back(std::move(t));
  }
  return m;
}

}  // namespace pestgraph
