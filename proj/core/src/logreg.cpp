//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/logreg.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace pestgraph {
namespace {

constexpr int kModelVersion = 1;

// log(1 + exp(z)) without overflow.
double softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double sigmoid(double z) {
  if (z >= 0)
    return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double squared_norm(std::span<const double> v) {
  return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

}  // namespace

Standardizer Standardizer::fit(const MatrixD &X) {
  const std::size_t n = X.rows(), d = X.cols();
  Standardizer s;
  s.mean.assign(d, 0.0);
  s.inv_std.assign(d, 0.0);
  if (n == 0)
    return s;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j)
      s.mean[j] += X(i, j);
  for (double &m: s.mean)
    m /= static_cast<double>(n);
  std::vector<double> var(d, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double c = X(i, j) - s.mean[j];
      var[j] += c * c;
    }
  for (std::size_t j = 0; j < d; ++j) {
    const double sd = std::sqrt(var[j] / static_cast<double>(n));
    s.inv_std[j] = sd > 1e-12 ? 1.0 / sd : 0.0;
  }
  return s;
}

void Standardizer::apply_row(std::span<const double> x,
                             std::span<double> out) const {
  if (x.size() != mean.size())
    throw std::invalid_argument("feature width " + std::to_string(x.size()) +
                                " != model width " +
                                std::to_string(mean.size()));
  for (std::size_t j = 0; j < x.size(); ++j)
    out[j] = (x[j] - mean[j]) * inv_std[j];
}

MatrixD Standardizer::apply(const MatrixD &X) const {
  MatrixD Z(X.rows(), X.cols());
  for (std::size_t i = 0; i < X.rows(); ++i)
    apply_row(X.row(i), Z.row(i));
  return Z;
}

double logreg_objective(const MatrixD &Z, std::span<const int> y,
                        std::span<const double> sample_weight, double l2,
                        std::span<const double> params,
                        std::span<double> grad) {
  const std::size_t n = Z.rows(), d = Z.cols();
  if (params.size() != d + 1)
    throw std::invalid_argument("params must have d + 1 entries");
  const bool want_grad = !grad.empty();
  if (want_grad)
    std::fill(grad.begin(), grad.end(), 0.0);

  double total_w = 0.0, loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = sample_weight.empty() ? 1.0 : sample_weight[i];
    const auto z_row = Z.row(i);
    double z = params[d];
    for (std::size_t j = 0; j < d; ++j)
      z += z_row[j] * params[j];
    loss += w * (softplus(z) - (y[i] ? z : 0.0));
    total_w += w;
    if (want_grad) {
      const double r = w * (sigmoid(z) - y[i]);
      for (std::size_t j = 0; j < d; ++j)
        grad[j] += r * z_row[j];
      grad[d] += r;
    }
  }
  if (total_w <= 0)
    throw std::invalid_argument("empty training set");
  loss /= total_w;
  double reg = 0.0;
  for (std::size_t j = 0; j < d; ++j)
    reg += params[j] * params[j];
  loss += 0.5 * l2 * reg;
  if (want_grad) {
    for (double &g: grad)
      g /= total_w;
    for (std::size_t j = 0; j < d; ++j)
      grad[j] += l2 * params[j];
  }
  return loss;
}

LogisticModel train_logreg(const TabularDataset &data,
                           const LogRegConfig &config) {
  if (config.l2 < 0)
    throw std::invalid_argument("l2 must be >= 0");
  data.validate(true);

  LogisticModel model;
  model.config = config;
  model.scaler = Standardizer::fit(data.X);
  const MatrixD Z = model.scaler.apply(data.X);
  const auto sw = class_sample_weights(data.y, config.class_weight);

  const std::size_t d = Z.cols();
  std::vector<double> p(d + 1, 0.0), g(d + 1), trial(d + 1), g_trial(d + 1);
  double f = logreg_objective(Z, data.y, sw, config.l2, p, g);

  // Diagonal Hessian bound (sigmoid' <= 1/4) used as the initial inverse
  // scaling; keeps the bias moving when l2 dwarfs the data term.
  std::vector<double> h0(d + 1, 0.25);
  {
    double total_w = 0.0;
    std::vector<double> sq(d, 0.0);
    for (std::size_t i = 0; i < Z.rows(); ++i) {
      total_w += sw[i];
      for (std::size_t j = 0; j < d; ++j)
        sq[j] += sw[i] * Z(i, j) * Z(i, j);
    }
    for (std::size_t j = 0; j < d; ++j)
      h0[j] = 0.25 * sq[j] / total_w + config.l2;
    for (double &h: h0)
      h = 1.0 / std::max(h, 1e-12);
  }

  // L-BFGS with Armijo backtracking.
  constexpr std::size_t kMemory = 10;
  std::vector<std::vector<double>> s_hist, y_hist;
  std::vector<double> rho_hist, dir(d + 1), alpha_buf(kMemory);
  auto dot = [](const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += a[i] * b[i];
    return s;
  };

  int it = 0;
  for (; it < config.max_iter; ++it) {
    if (std::sqrt(squared_norm(g)) < config.tol) {
      model.converged = true;
      break;
    }
    dir = g;
    const std::size_t m = s_hist.size();
    for (std::size_t k = m; k-- > 0;) {
      alpha_buf[k] = rho_hist[k] * dot(s_hist[k], dir);
      for (std::size_t j = 0; j <= d; ++j)
        dir[j] -= alpha_buf[k] * y_hist[k][j];
    }
    for (std::size_t j = 0; j <= d; ++j)
      dir[j] *= h0[j];
    for (std::size_t k = 0; k < m; ++k) {
      const double beta = rho_hist[k] * dot(y_hist[k], dir);
      for (std::size_t j = 0; j <= d; ++j)
        dir[j] += (alpha_buf[k] - beta) * s_hist[k][j];
    }
    double slope = dot(g, dir);
    if (!(slope > 0)) {  // not a descent direction: restart from the scaling
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      for (std::size_t j = 0; j <= d; ++j)
        dir[j] = h0[j] * g[j];
      slope = dot(g, dir);
    }

    double step = 1.0, f_trial = 0.0;
    bool accepted = false;
    while (step > 1e-20) {
      for (std::size_t j = 0; j <= d; ++j)
        trial[j] = p[j] - step * dir[j];
      f_trial = logreg_objective(Z, data.y, sw, config.l2, trial, g_trial);
      if (f_trial <= f - 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted)
      break;  // no further descent possible at machine precision

    std::vector<double> sv(d + 1), yv(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
      sv[j] = trial[j] - p[j];
      yv[j] = g_trial[j] - g[j];
    }
    const double sy = dot(sv, yv);
    if (sy > 1e-16 * std::sqrt(dot(sv, sv) * dot(yv, yv))) {
      if (s_hist.size() == kMemory) {
        s_hist.erase(s_hist.begin());
        y_hist.erase(y_hist.begin());
        rho_hist.erase(rho_hist.begin());
      }
      s_hist.push_back(std::move(sv));
      y_hist.push_back(std::move(yv));
      rho_hist.push_back(1.0 / sy);
    }
    p.swap(trial);
    g.swap(g_trial);
    f = f_trial;
  }
  model.iterations = it;
  model.gradient_norm = std::sqrt(squared_norm(g));
  if (model.gradient_norm < config.tol)
    model.converged = true;
  model.weights.assign(p.begin(), p.begin() + static_cast<long>(d));
  model.bias = p[d];
  return model;
}

double LogisticModel::decision(std::span<const double> x) const {
  std::vector<double> z(x.size());
  scaler.apply_row(x, z);
  double s = bias;
  for (std::size_t j = 0; j < z.size(); ++j)
    s += weights[j] * z[j];
  return s;
}

double LogisticModel::probability(std::span<const double> x) const {
  return sigmoid(decision(x));
}

std::vector<double> LogisticModel::decision(const MatrixD &X) const {
  std::vector<double> out(X.rows());
  for (std::size_t i = 0; i < X.rows(); ++i)
    out[i] = decision(X.row(i));
  return out;
}

std::vector<double> LogisticModel::probability(const MatrixD &X) const {
  auto out = decision(X);
  for (double &v: out)
    v = sigmoid(v);
  return out;
}

std::vector<int> LogisticModel::predict(const MatrixD &X) const {
  const auto s = decision(X);
  std::vector<int> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    out[i] = s[i] > 0.0;
  return out;
}

std::string LogisticModel::to_json() const {
  nlohmann::json j;
  j["model"] = "logreg";
  j["version"] = kModelVersion;
  j["config"] = { { "l2", config.l2 },
                  { "max_iter", config.max_iter },
                  { "tol", config.tol },
                  { "class_weight", config.class_weight } };
  j["mean"] = scaler.mean;
  j["inv_std"] = scaler.inv_std;
  j["weights"] = weights;
  j["bias"] = bias;
  j["iterations"] = iterations;
  j["converged"] = converged;
  return j.dump();
}

LogisticModel LogisticModel::from_json(const std::string &text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("model") != "logreg" || j.at("version") != kModelVersion)
    throw std::invalid_argument("not a version-1 logreg model");
  LogisticModel m;
  const auto &c = j.at("config");
  m.config.l2 = c.at("l2");
  m.config.max_iter = c.at("max_iter");
  m.config.tol = c.at("tol");
  m.config.class_weight = c.at("class_weight");
  m.scaler.mean = j.at("mean").get<std::vector<double>>();
  m.scaler.inv_std = j.at("inv_std").get<std::vector<double>>();
  m.weights = j.at("weights").get<std::vector<double>>();
  m.bias = j.at("bias");
  m.iterations = j.at("iterations");
  m.converged = j.at("converged");
  if (m.weights.size() != m.scaler.mean.size() ||
      m.weights.size() != m.scaler.inv_std.size())
    throw std::invalid_argument("inconsistent logreg model widths");
  return m;
}

}  // namespace pestgraph
