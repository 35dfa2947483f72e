//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/topofeatures.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pestgraph/elements.h"
#include "pestgraph/fingerprints.h"
#include "pestgraph/graph.h"

namespace pestgraph {
namespace {

constexpr double kMaxDegree = 8.0;

void check_bins(int bins) {
  if (bins < 2)
    throw std::invalid_argument("histogram bins must be >= 2");
}

void append(FeatureVector &fv, const std::string &name,
            const std::vector<double> &hist) {
  for (std::size_t b = 0; b < hist.size(); ++b) {
    fv.values.push_back(hist[b]);
    fv.schema.push_back(name + "_" + std::to_string(b));
  }
}

int common_neighbors(const Molecule &mol, int u, int v) {
  int c = 0;
  for (const Neighbor &a: mol.neighbors(u))
    for (const Neighbor &b: mol.neighbors(v))
      c += a.atom == b.atom;
  return c;
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

std::vector<double> fixed_histogram(const std::vector<double> &values,
                                    int bins, double lo, double hi) {
  check_bins(bins);
  std::vector<double> h(bins, 0.0);
  const double width = hi - lo;
  for (double v: values) {
    // Values within rounding of an edge belong to the upper bin, so that
    // e.g. a mean of exactly 2.4 lands in the same bin however it was summed.
    const double x = (v - lo) / width * bins;
    auto b = static_cast<long>(std::floor(x + 1e-9 * std::max(1.0, std::abs(x))));
    b = std::clamp<long>(b, 0, bins - 1);
    h[b] += 1.0;
  }
  return h;
}

AtomTopology atom_topology(const Molecule &mol) {
  const int n = mol.num_atoms();
  AtomTopology t;
  for (auto *v: { &t.degree, &t.min_neighbor_degree, &t.max_neighbor_degree,
                  &t.mean_neighbor_degree, &t.std_neighbor_degree,
                  &t.mean_jaccard, &t.local_degree_score })
    v->assign(n, 0.0);

  for (int i = 0; i < n; ++i) {
    const int d = mol.degree(i);
    t.degree[i] = d;
    if (d == 0)
      continue;
    double lo = 1e300, hi = 0.0, sum = 0.0, sq = 0.0, jac = 0.0;
    for (const Neighbor &nb: mol.neighbors(i)) {
      const double dn = mol.degree(nb.atom);
      lo = std::min(lo, dn);
      hi = std::max(hi, dn);
      sum += dn;
      sq += dn * dn;
      const int common = common_neighbors(mol, i, nb.atom);
      const int uni = d + mol.degree(nb.atom) - common;
      jac += static_cast<double>(common) / uni;
    }
    const double mean = sum / d;
    t.min_neighbor_degree[i] = lo;
    t.max_neighbor_degree[i] = hi;
    t.mean_neighbor_degree[i] = mean;
    // Degrees are integers, so d^2 * variance is computed exactly.
    t.std_neighbor_degree[i] = std::sqrt(std::max(0.0, d * sq - sum * sum)) / d;
    t.mean_jaccard[i] = jac / d;
    t.local_degree_score[i] = sum / d;
  }
  return t;
}

FeatureVector ltp_features(const Molecule &mol, int bins) {
  check_bins(bins);
  const AtomTopology t = atom_topology(mol);
  FeatureVector fv;
  append(fv, "degree", fixed_histogram(t.degree, bins, 0.0, kMaxDegree));
  append(fv, "nbr_degree_min",
         fixed_histogram(t.min_neighbor_degree, bins, 0.0, kMaxDegree));
  append(fv, "nbr_degree_max",
         fixed_histogram(t.max_neighbor_degree, bins, 0.0, kMaxDegree));
  append(fv, "nbr_degree_mean",
         fixed_histogram(t.mean_neighbor_degree, bins, 0.0, kMaxDegree));
  append(fv, "nbr_degree_std",
         fixed_histogram(t.std_neighbor_degree, bins, 0.0, kMaxDegree / 2));
  append(fv, "jaccard", fixed_histogram(t.mean_jaccard, bins, 0.0, 1.0));
  append(fv, "local_degree_score",
         fixed_histogram(t.local_degree_score, bins, 0.0, kMaxDegree));
  return fv;
}

std::vector<double> edge_betweenness(const Molecule &mol) {
  const int n = mol.num_atoms();
  std::vector<double> eb(mol.num_bonds(), 0.0);
  std::vector<double> sigma(n), delta(n);
  std::vector<int> dist(n), order;
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int u = order[head];
      for (const Neighbor &nb: mol.neighbors(u)) {
        if (dist[nb.atom] < 0) {
          dist[nb.atom] = dist[u] + 1;
          order.push_back(nb.atom);
        }
        if (dist[nb.atom] == dist[u] + 1)
          sigma[nb.atom] += sigma[u];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int w = *it;
      for (const Neighbor &nb: mol.neighbors(w)) {
        const int v = nb.atom;
        if (dist[v] != dist[w] - 1)
          continue;
        const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        eb[nb.bond] += c;
        delta[v] += c;
      }
    }
  }
  // Every unordered pair was counted from both ends.
  for (double &x: eb)
    x /= 2.0;
  return eb;
}

std::vector<double> scan_scores(const Molecule &mol) {
  std::vector<double> out;
  out.reserve(mol.num_bonds());
  for (const Bond &b: mol.bonds()) {
    const double common = common_neighbors(mol, b.begin, b.end);
    out.push_back((common + 2.0) / std::sqrt((mol.degree(b.begin) + 1.0) *
                                             (mol.degree(b.end) + 1.0)));
  }
  return out;
}

std::vector<double> edge_ari(const Molecule &mol) {
  const auto comp = component_labels(mol);
  std::vector<int> comp_size;
  for (int c: comp) {
    if (c >= static_cast<int>(comp_size.size()))
      comp_size.resize(c + 1, 0);
    ++comp_size[c];
  }

  std::vector<double> out;
  out.reserve(mol.num_bonds());
  std::vector<int> in_u(mol.num_atoms()), in_v(mol.num_atoms());
  for (const Bond &b: mol.bonds()) {
    std::fill(in_u.begin(), in_u.end(), 0);
    std::fill(in_v.begin(), in_v.end(), 0);
    in_u[b.begin] = 1;
    in_v[b.end] = 1;
    for (const Neighbor &nb: mol.neighbors(b.begin))
      in_u[nb.atom] = 1;
    for (const Neighbor &nb: mol.neighbors(b.end))
      in_v[nb.atom] = 1;

    // 2x2 contingency table over the component.
    double table[2][2] = { { 0, 0 }, { 0, 0 } };
    const int c = comp[b.begin];
    for (int i = 0; i < mol.num_atoms(); ++i)
      if (comp[i] == c)
        table[in_u[i]][in_v[i]] += 1.0;

    const double n = comp_size[c];
    double index = 0, rows = 0, cols = 0;
    for (int i = 0; i < 2; ++i) {
      rows += choose2(table[i][0] + table[i][1]);
      cols += choose2(table[0][i] + table[1][i]);
      for (int j = 0; j < 2; ++j)
        index += choose2(table[i][j]);
    }
    const double pairs = choose2(n);
    const double expected = pairs > 0 ? rows * cols / pairs : 0.0;
    const double max_index = 0.5 * (rows + cols);
    const double denom = max_index - expected;
    out.push_back(std::abs(denom) < 1e-12 ? 0.0 : (index - expected) / denom);
  }
  return out;
}

FeatureVector moltop_features(const Molecule &mol, int bins) {
  check_bins(bins);
  const double n = mol.num_atoms();
  const double pairs = n * (n - 1.0) / 2.0;

  std::vector<double> eb = edge_betweenness(mol);
  for (double &x: eb)
    x = pairs > 0 ? x / pairs : 0.0;

  FeatureVector fv;
  append(fv, "edge_betweenness", fixed_histogram(eb, bins, 0.0, 1.0));
  append(fv, "scan", fixed_histogram(scan_scores(mol), bins, 0.0, 1.0));
  append(fv, "ari", fixed_histogram(edge_ari(mol), bins, -1.0, 1.0));

  const auto counts = atom_count_vector(mol);
  const auto dense = counts.dense();
  const auto names = atom_count_schema();
  // Element slots and "other"; the trailing heavy-atom and bond totals are
  // not element counts.
  for (std::size_t s = 0; s + 2 < names.size(); ++s) {
    fv.values.push_back(dense[s]);
    fv.schema.push_back("element_" + names[s]);
  }

  double orders[4] = { 0, 0, 0, 0 };
  for (const Bond &b: mol.bonds())
    orders[bond_code(b.order) - 1] += 1.0;
  const char *order_names[4] = { "single", "double", "triple", "aromatic" };
  for (int k = 0; k < 4; ++k) {
    fv.values.push_back(orders[k]);
    fv.schema.push_back(std::string("bond_") + order_names[k]);
  }
  return fv;
}

}  // namespace pestgraph
