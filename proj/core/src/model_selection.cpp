//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/model_selection.h"

#include <stdexcept>

#include "pestgraph/format.h"
#include "pestgraph/metrics.h"
#include "pestgraph/rng.h"

namespace pestgraph {
namespace {

void check_known(const ParamSet &p, std::initializer_list<const char *> known,
                 const char *family) {
  for (const auto &[k, v]: p) {
    bool ok = false;
    for (const char *name: known)
      ok = ok || k == name;
    if (!ok)
      throw std::invalid_argument(std::string("unknown ") + family +
                                  " parameter '" + k + "'");
  }
}

std::vector<int> gather(std::span<const int> y,
                        std::span<const std::size_t> rows) {
  std::vector<int> out;
  out.reserve(rows.size());
  for (auto r: rows)
    out.push_back(y[r]);
  return out;
}

}  // namespace

std::vector<ParamSet> expand_grid(const std::vector<GridAxis> &axes) {
  std::vector<ParamSet> out { ParamSet {} };
  for (const auto &[name, values]: axes) {
    if (values.empty())
      throw std::invalid_argument("grid axis '" + name + "' has no values");
    std::vector<ParamSet> next;
    for (const auto &p: out)
      for (double v: values) {
        ParamSet q = p;
        q[name] = v;
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

std::string param_set_to_string(const ParamSet &p) {
  std::string s;
  for (const auto &[k, v]: p) {
    if (!s.empty())
      s += ';';
    s += k + "=" + format_double(v);
  }
  return s.empty() ? "default" : s;
}

std::vector<int> stratified_kfold(std::span<const int> y, int folds,
                                  std::uint64_t seed) {
  if (folds < 2)
    throw std::invalid_argument("folds must be >= 2");
  std::vector<int> fold(y.size(), 0);
  SplitMix64 rng(seed);
  for (int cls: { 0, 1 }) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < y.size(); ++i)
      if ((y[i] != 0) == (cls == 1))
        members.push_back(i);
    if (members.empty())
      continue;
    if (members.size() < static_cast<std::size_t>(folds))
      throw std::invalid_argument(
          "class " + std::to_string(cls) + " has " +
          std::to_string(members.size()) + " members, fewer than " +
          std::to_string(folds) + " folds");
    rng.shuffle(members);
    for (std::size_t k = 0; k < members.size(); ++k)
      fold[members[k]] = static_cast<int>(k % static_cast<std::size_t>(folds));
  }
  return fold;
}

CvMetric mcc_metric() {
  return [](std::span<const int> truth, const Predictions &pred) {
    return mcc(truth, pred.labels);
  };
}

GridSearchResult grid_search_cv(std::span<const int> y,
                                std::span<const std::size_t> rows,
                                const std::vector<ParamSet> &grid,
                                const FitPredict &fit_predict,
                                const CvMetric &metric, int folds,
                                std::uint64_t seed) {
  if (grid.empty())
    throw std::invalid_argument("empty parameter grid");
  const auto local_y = gather(y, rows);
  const auto fold = stratified_kfold(local_y, folds, seed);

  std::vector<std::vector<std::size_t>> train(folds), eval(folds);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (int f = 0; f < folds; ++f)
      (fold[k] == f ? eval[f] : train[f]).push_back(rows[k]);

  GridSearchResult res;
  res.mean_scores.assign(grid.size(), 0.0);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double sum = 0;
    for (int f = 0; f < folds; ++f) {
      const Predictions pred = fit_predict(grid[g], train[f], eval[f]);
      if (pred.labels.size() != eval[f].size())
        throw std::logic_error("fit_predict returned wrong prediction count");
      const double s = metric(gather(y, eval[f]), pred);
      res.table.push_back({ g, f, s });
      sum += s;
    }
    res.mean_scores[g] = sum / folds;
  }
  for (std::size_t g = 1; g < grid.size(); ++g)
    if (res.mean_scores[g] > res.mean_scores[res.best_index])
      res.best_index = g;
  res.best = grid[res.best_index];
  return res;
}

ForestConfig apply_params(ForestConfig c, const ParamSet &p) {
  check_known(p, { "n_trees", "max_depth", "min_leaf", "max_features" },
              "forest");
  if (auto it = p.find("n_trees"); it != p.end())
    c.n_trees = static_cast<int>(it->second);
  if (auto it = p.find("max_depth"); it != p.end())
    c.max_depth = static_cast<int>(it->second);
  if (auto it = p.find("min_leaf"); it != p.end())
    c.min_leaf = static_cast<int>(it->second);
  if (auto it = p.find("max_features"); it != p.end())
    c.max_features = static_cast<int>(it->second);
  return c;
}

LogRegConfig apply_params(LogRegConfig c, const ParamSet &p) {
  check_known(p, { "l2", "max_iter", "tol" }, "logreg");
  if (auto it = p.find("l2"); it != p.end())
    c.l2 = it->second;
  if (auto it = p.find("max_iter"); it != p.end())
    c.max_iter = static_cast<int>(it->second);
  if (auto it = p.find("tol"); it != p.end())
    c.tol = it->second;
  return c;
}

SvmConfig apply_params(SvmConfig c, const ParamSet &p) {
  check_known(p, { "C", "tol" }, "svm");
  if (auto it = p.find("C"); it != p.end())
    c.C = it->second;
  if (auto it = p.find("tol"); it != p.end())
    c.tol = it->second;
  return c;
}

FitPredict forest_family(const TabularDataset &data, ForestConfig base) {
  return [&data, base](const ParamSet &params,
                       std::span<const std::size_t> train,
                       std::span<const std::size_t> eval) {
    const auto model =
        train_random_forest(data.subset(train), apply_params(base, params));
    const auto test = data.subset(eval);
    return Predictions { model.predict_proba(test.X), model.predict(test.X) };
  };
}

FitPredict logreg_family(const TabularDataset &data, LogRegConfig base) {
  return [&data, base](const ParamSet &params,
                       std::span<const std::size_t> train,
                       std::span<const std::size_t> eval) {
    const auto model =
        train_logreg(data.subset(train), apply_params(base, params));
    const auto test = data.subset(eval);
    return Predictions { model.probability(test.X), model.predict(test.X) };
  };
}

FitPredict svm_family(const MatrixD &K, std::span<const int> y,
                      SvmConfig base) {
  return [&K, y, base](const ParamSet &params,
                       std::span<const std::size_t> train,
                       std::span<const std::size_t> eval) {
    const auto model = train_svm_precomputed(kernel_submatrix(K, train, train),
                                             gather(y, train),
                                             apply_params(base, params));
    const auto cross = kernel_submatrix(K, eval, train);
    return Predictions { model.decision(cross), model.predict(cross) };
  };
}

}  // namespace pestgraph
