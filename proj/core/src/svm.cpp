//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/svm.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "pestgraph/tabular.h"

namespace pestgraph {
namespace {

constexpr int kModelVersion = 1;
constexpr double kTau = 1e-12;

void check_symmetric(const MatrixD &K) {
  if (K.rows() != K.cols())
    throw std::invalid_argument("kernel matrix must be square");
  double scale = 0;
  for (double v: K.data())
    scale = std::max(scale, std::abs(v));
  const double eps = 1e-9 * std::max(1.0, scale);
  for (std::size_t i = 0; i < K.rows(); ++i)
    for (std::size_t j = i + 1; j < K.cols(); ++j)
      if (std::abs(K(i, j) - K(j, i)) > eps)
        throw std::invalid_argument(
            "kernel matrix is not symmetric at (" + std::to_string(i) + "," +
            std::to_string(j) + ")");
}

}  // namespace

SvmModel train_svm_precomputed(const MatrixD &K, std::span<const int> y,
                               const SvmConfig &config) {
  if (!(config.C > 0))
    throw std::invalid_argument("C must be > 0");
  check_symmetric(K);
  const std::size_t n = K.rows();
  if (y.size() != n)
    throw std::invalid_argument("label count does not match kernel size");
  std::size_t pos = 0;
  for (int v: y)
    pos += v != 0;
  if (pos == 0 || pos == n)
    throw DegenerateLabels("SVM training labels must contain both classes");

  SvmModel m;
  m.config = config;
  m.alpha.assign(n, 0.0);
  m.y_signed.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    m.y_signed[i] = y[i] ? 1 : -1;
  const auto cw = class_sample_weights(y, config.class_weight);
  m.upper.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    m.upper[i] = config.C * cw[i];

  const auto &ys = m.y_signed;
  auto &a = m.alpha;
  const auto &C = m.upper;
  auto Q = [&](std::size_t i, std::size_t j) {
    return static_cast<double>(ys[i] * ys[j]) * K(i, j);
  };
  // Gradient of 1/2 a'Qa - e'a.
  std::vector<double> G(n, -1.0);

  auto in_up = [&](std::size_t t) {
    return (ys[t] == 1 && a[t] < C[t]) || (ys[t] == -1 && a[t] > 0);
  };
  auto in_low = [&](std::size_t t) {
    return (ys[t] == 1 && a[t] > 0) || (ys[t] == -1 && a[t] < C[t]);
  };

  long iter = 0;
  while (true) {
    double gmax = -std::numeric_limits<double>::infinity();
    double gmin = std::numeric_limits<double>::infinity();
    std::size_t i = n;
    for (std::size_t t = 0; t < n; ++t) {
      if (in_up(t) && -ys[t] * G[t] > gmax) {
        gmax = -ys[t] * G[t];
        i = t;
      }
    }
    std::size_t j = n;
    double best_obj = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      if (!in_low(t))
        continue;
      const double v = -ys[t] * G[t];
      gmin = std::min(gmin, v);
      if (i < n && v < gmax) {
        const double b = gmax - v;
        double quad = K(i, i) + K(t, t) - 2.0 * K(i, t);
        if (quad <= 0)
          quad = kTau;
        const double obj = -(b * b) / quad;
        if (obj < best_obj) {
          best_obj = obj;
          j = t;
        }
      }
    }
    m.max_violation = gmax - gmin;
    if (i == n || j == n || m.max_violation <= config.tol) {
      m.converged = true;
      break;
    }
    if (iter >= config.max_passes)
      break;
    ++iter;

    const double ai_old = a[i], aj_old = a[j];
    const double Ci = C[i], Cj = C[j];
    if (ys[i] != ys[j]) {
      double quad = K(i, i) + K(j, j) + 2.0 * Q(i, j);
      if (quad <= 0)
        quad = kTau;
      const double delta = (-G[i] - G[j]) / quad;
      const double diff = a[i] - a[j];
      a[i] += delta;
      a[j] += delta;
      if (diff > 0) {
        if (a[j] < 0) {
          a[j] = 0;
          a[i] = diff;
        }
      } else if (a[i] < 0) {
        a[i] = 0;
        a[j] = -diff;
      }
      if (diff > Ci - Cj) {
        if (a[i] > Ci) {
          a[i] = Ci;
          a[j] = Ci - diff;
        }
      } else if (a[j] > Cj) {
        a[j] = Cj;
        a[i] = Cj + diff;
      }
    } else {
      double quad = K(i, i) + K(j, j) - 2.0 * Q(i, j);
      if (quad <= 0)
        quad = kTau;
      const double delta = (G[i] - G[j]) / quad;
      const double sum = a[i] + a[j];
      a[i] -= delta;
      a[j] += delta;
      if (sum > Ci) {
        if (a[i] > Ci) {
          a[i] = Ci;
          a[j] = sum - Ci;
        }
      } else if (a[j] < 0) {
        a[j] = 0;
        a[i] = sum;
      }
      if (sum > Cj) {
        if (a[j] > Cj) {
          a[j] = Cj;
          a[i] = sum - Cj;
        }
      } else if (a[i] < 0) {
        a[i] = 0;
        a[j] = sum;
      }
    }
    const double di = a[i] - ai_old, dj = a[j] - aj_old;
    for (std::size_t k = 0; k < n; ++k)
      G[k] += Q(k, i) * di + Q(k, j) * dj;
  }
  m.iterations = iter;

  // rho from free vectors, else midpoint of the feasible interval.
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  double sum_free = 0;
  int n_free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double yg = ys[t] * G[t];
    if (a[t] >= C[t]) {
      if (ys[t] == -1)
        ub = std::min(ub, yg);
      else
        lb = std::max(lb, yg);
    } else if (a[t] <= 0) {
      if (ys[t] == 1)
        ub = std::min(ub, yg);
      else
        lb = std::max(lb, yg);
    } else {
      ++n_free;
      sum_free += yg;
    }
  }
  const double rho = n_free > 0 ? sum_free / n_free : (ub + lb) / 2.0;
  m.bias = -rho;
  return m;
}

std::size_t SvmModel::n_support() const {
  return static_cast<std::size_t>(
      std::count_if(alpha.begin(), alpha.end(), [](double v) { return v > 0; }));
}

double SvmModel::decision(std::span<const double> kernel_row) const {
  if (kernel_row.size() != alpha.size())
    throw std::invalid_argument("kernel row has " +
                                std::to_string(kernel_row.size()) +
                                " entries, model has " +
                                std::to_string(alpha.size()) + " training rows");
  double f = bias;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0)
      f += alpha[i] * y_signed[i] * kernel_row[i];
  return f;
}

std::vector<double> SvmModel::decision(const MatrixD &cross) const {
  std::vector<double> out(cross.rows());
  for (std::size_t r = 0; r < cross.rows(); ++r)
    out[r] = decision(cross.row(r));
  return out;
}

std::vector<int> SvmModel::predict(const MatrixD &cross) const {
  const auto f = decision(cross);
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    out[i] = f[i] > 0;
  return out;
}

double svm_dual_objective(const MatrixD &K, std::span<const int> y,
                          std::span<const double> alpha) {
  const std::size_t n = alpha.size();
  double lin = 0, quad = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lin += alpha[i];
    const double yi = y[i] ? 1.0 : -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double yj = y[j] ? 1.0 : -1.0;
      quad += alpha[i] * alpha[j] * yi * yj * K(i, j);
    }
  }
  return lin - 0.5 * quad;
}

MatrixD kernel_submatrix(const MatrixD &K, std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols) {
  MatrixD out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      out(r, c) = K(rows[r], cols[c]);
  return out;
}

std::string SvmModel::to_json() const {
  nlohmann::json j;
  j["model"] = "svm_precomputed";
  j["version"] = kModelVersion;
  j["config"] = { { "C", config.C },
                  { "tol", config.tol },
                  { "max_passes", config.max_passes },
                  { "class_weight", config.class_weight } };
  j["kernel_tag"] = kernel_tag;
  j["train_ids"] = train_ids;
  j["alpha"] = alpha;
  j["y"] = y_signed;
  j["upper"] = upper;
  j["bias"] = bias;
  j["iterations"] = iterations;
  j["max_violation"] = max_violation;
  j["converged"] = converged;
  return j.dump();
}

SvmModel SvmModel::from_json(const std::string &text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("model") != "svm_precomputed" || j.at("version") != kModelVersion)
    throw std::invalid_argument("not a version-1 svm_precomputed model");
  SvmModel m;
  const auto &c = j.at("config");
  m.config.C = c.at("C");
  m.config.tol = c.at("tol");
  m.config.max_passes = c.at("max_passes");
  m.config.class_weight = c.at("class_weight");
  m.kernel_tag = j.at("kernel_tag");
  m.train_ids = j.at("train_ids").get<std::vector<std::string>>();
  m.alpha = j.at("alpha").get<std::vector<double>>();
  m.y_signed = j.at("y").get<std::vector<int>>();
  m.upper = j.at("upper").get<std::vector<double>>();
  m.bias = j.at("bias");
  m.iterations = j.at("iterations");
  m.max_violation = j.at("max_violation");
  m.converged = j.at("converged");
  if (m.y_signed.size() != m.alpha.size() || m.upper.size() != m.alpha.size())
    throw std::invalid_argument("inconsistent svm model lengths");
  return m;
}

}  // namespace pestgraph
