//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/kernels.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pestgraph/format.h"
#include "pestgraph/graph.h"
#include "pestgraph/parallel.h"
#include "pestgraph/rng.h"

namespace pestgraph {
namespace {

SparseHistogram to_histogram(const std::map<std::uint64_t, double> &counts) {
  return { counts.begin(), counts.end() };
}

template <class Op>
double merge_sum(const SparseHistogram &a, const SparseHistogram &b, Op op) {
  double s = 0.0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      s += op(i->second, j->second);
      ++i;
      ++j;
    }
  }
  return s;
}

template <class Op>
MatrixD gram(std::span<const SparseHistogram> hists, int threads, Op op) {
  const std::size_t n = hists.size();
  MatrixD k(n, n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j)
      k(i, j) = merge_sum(hists[i], hists[j], op);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      k(i, j) = k(j, i);
  return k;
}

std::vector<std::string> index_ids(std::size_t n) {
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i)
    ids[i] = std::to_string(i);
  return ids;
}

}  // namespace

WLDictionary::WLDictionary(int h): h_(h), codes_(h + 1) {
  if (h < 0)
    throw std::invalid_argument("WL iterations must be non-negative");
}

WLLabeling WLDictionary::fit_transform(std::span<const Molecule> molecules) {
  return label(molecules, &codes_);
}

WLLabeling WLDictionary::transform(std::span<const Molecule> molecules) const {
  return label(molecules, nullptr);
}

WLLabeling WLDictionary::label(std::span<const Molecule> molecules,
                               std::vector<std::map<Key, int>> *grow) const {
  const auto &codes = grow ? *grow : codes_;
  WLLabeling out;
  out.iterations = h_;
  out.labels.resize(h_ + 1);

  auto code_of = [&](int iter, const Key &key) {
    auto it = codes[iter].find(key);
    if (it != codes[iter].end())
      return it->second;
    if (!grow)
      return 0;
    auto &dict = (*grow)[iter];
    const int code = static_cast<int>(dict.size()) + 1;
    dict.emplace(key, code);
    return code;
  };

  auto &layer0 = out.labels[0];
  layer0.resize(molecules.size());
  for (std::size_t m = 0; m < molecules.size(); ++m) {
    const Molecule &mol = molecules[m];
    layer0[m].resize(mol.num_atoms());
    for (const Atom &a: mol.atoms())
      layer0[m][a.index] =
          code_of(0, { a.element, a.formal_charge, a.aromatic ? 1 : 0 });
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> env;
  for (int it = 1; it <= h_; ++it) {
    const auto &prev = out.labels[it - 1];
    auto &cur = out.labels[it];
    cur.resize(molecules.size());
    for (std::size_t m = 0; m < molecules.size(); ++m) {
      const Molecule &mol = molecules[m];
      cur[m].resize(mol.num_atoms());
      for (int i = 0; i < mol.num_atoms(); ++i) {
        env.clear();
        for (const Neighbor &nb: mol.neighbors(i))
          env.emplace_back(bond_code(mol.bond(nb.bond).order),
                           prev[m][nb.atom]);
        std::sort(env.begin(), env.end());
        Key key;
        key.reserve(1 + 2 * env.size());
        key.push_back(prev[m][i]);
        for (auto [b, l]: env) {
          key.push_back(b);
          key.push_back(l);
        }
        cur[m][i] = code_of(it, key);
      }
    }
  }

  out.alphabet_sizes.resize(h_ + 1);
  for (int it = 0; it <= h_; ++it)
    out.alphabet_sizes[it] = static_cast<int>(codes[it].size()) + 1;
  return out;
}

WLLabeling wl_relabel(std::span<const Molecule> molecules, int h) {
  return WLDictionary(h).fit_transform(molecules);
}

std::vector<SparseHistogram> wl_histograms(const WLLabeling &labeling) {
  const std::size_t n = labeling.labels.empty() ? 0 : labeling.labels[0].size();
  std::vector<SparseHistogram> hists(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::map<std::uint64_t, double> counts;
    for (int it = 0; it <= labeling.iterations; ++it)
      for (int l: labeling.labels[it][m])
        counts[(static_cast<std::uint64_t>(it) << 32) |
               static_cast<std::uint32_t>(l)] += 1.0;
    hists[m] = to_histogram(counts);
  }
  return hists;
}

std::vector<SparseHistogram> shortest_path_histograms(
    std::span<const Molecule> molecules, const WLLabeling &labeling) {
  std::vector<SparseHistogram> hists(molecules.size());
  for (std::size_t m = 0; m < molecules.size(); ++m) {
    const Molecule &mol = molecules[m];
    const auto &lab = labeling.labels[0][m];
    const auto dist = topological_distance_matrix(mol);
    std::map<std::uint64_t, double> counts;
    for (int u = 0; u < mol.num_atoms(); ++u) {
      for (int v = u + 1; v < mol.num_atoms(); ++v) {
        const int d = dist(u, v);
        if (d == kUnreachable)
          continue;
        const auto [lo, hi] = std::minmax(lab[u], lab[v]);
        counts[(static_cast<std::uint64_t>(lo) << 42) |
               (static_cast<std::uint64_t>(d) << 21) |
               static_cast<std::uint64_t>(hi)] += 1.0;
      }
    }
    hists[m] = to_histogram(counts);
  }
  return hists;
}

std::vector<SparseHistogram> propagation_histograms(
    std::span<const Molecule> molecules, const WLLabeling &labeling, int t_max,
    double bin_width, std::uint64_t seed) {
  if (t_max < 1)
    throw std::invalid_argument("propagation t_max must be >= 1");
  if (!(bin_width > 0.0))
    throw std::invalid_argument("propagation bin width must be positive");

  const int dim = labeling.alphabet_sizes.empty() ? 1 : labeling.alphabet_sizes[0];

  // One shared projection and offset per propagation step.
  SplitMix64 rng(seed);
  std::vector<std::vector<double>> proj(t_max, std::vector<double>(dim));
  std::vector<double> offset(t_max);
  for (int t = 0; t < t_max; ++t) {
    for (double &x: proj[t])
      x = rng.normal();
    offset[t] = rng.uniform() * bin_width;
  }

  std::vector<SparseHistogram> hists(molecules.size());
  std::vector<double> column;
  for (std::size_t m = 0; m < molecules.size(); ++m) {
    const Molecule &mol = molecules[m];
    const int n = mol.num_atoms();
    MatrixD p(n, dim, 0.0);
    for (int i = 0; i < n; ++i)
      p(i, labeling.labels[0][m][i]) = 1.0;

    std::map<std::uint64_t, double> counts;
    for (int t = 0; t < t_max; ++t) {
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int k = 0; k < dim; ++k)
          s += p(i, k) * proj[t][k];
        const auto bin =
            static_cast<std::int64_t>(std::floor((s + offset[t]) / bin_width));
        const std::uint64_t key =
            (static_cast<std::uint64_t>(t) << 48) |
            (static_cast<std::uint64_t>(bin + (std::int64_t { 1 } << 40)) &
             ((std::uint64_t { 1 } << 48) - 1));
        counts[key] += 1.0;
      }
      if (t + 1 == t_max)
        break;

      // Row-normalized adjacency averaging. Neighbor contributions are summed
      // in sorted order so isomorphic inputs give bit-identical results.
      MatrixD next(n, dim, 0.0);
      for (int i = 0; i < n; ++i) {
        auto nbs = mol.neighbors(i);
        if (nbs.empty()) {
          for (int k = 0; k < dim; ++k)
            next(i, k) = p(i, k);
          continue;
        }
        for (int k = 0; k < dim; ++k) {
          column.clear();
          for (const Neighbor &nb: nbs)
            column.push_back(p(nb.atom, k));
          std::sort(column.begin(), column.end());
          double s = 0.0;
          for (double x: column)
            s += x;
          next(i, k) = s / static_cast<double>(nbs.size());
        }
      }
      p = std::move(next);
    }
    hists[m] = to_histogram(counts);
  }
  return hists;
}

MatrixD histogram_dot_matrix(std::span<const SparseHistogram> hists,
                             int threads) {
  return gram(hists, threads, [](double a, double b) { return a * b; });
}

MatrixD histogram_intersection_matrix(std::span<const SparseHistogram> hists,
                                      int threads) {
  return gram(hists, threads, [](double a, double b) { return std::min(a, b); });
}

KernelMatrix wl_kernel_matrix(std::span<const Molecule> molecules, int h,
                              int threads) {
  return compute_kernel({ .type = KernelType::kWL, .h = h, .normalize = false },
                        molecules, {}, threads);
}

KernelMatrix wloa_kernel_matrix(std::span<const Molecule> molecules, int h,
                                int threads) {
  return compute_kernel({ .type = KernelType::kWLOA, .h = h, .normalize = false },
                        molecules, {}, threads);
}

KernelMatrix shortest_path_kernel_matrix(std::span<const Molecule> molecules,
                                         int threads) {
  return compute_kernel({ .type = KernelType::kShortestPath, .normalize = false },
                        molecules, {}, threads);
}

KernelMatrix propagation_kernel_matrix(std::span<const Molecule> molecules,
                                       int t_max, double bin_width,
                                       std::uint64_t seed, int threads) {
  return compute_kernel({ .type = KernelType::kPropagation,
                          .t_max = t_max,
                          .bin_width = bin_width,
                          .seed = seed,
                          .normalize = false },
                        molecules, {}, threads);
}

namespace {

KernelMatrix normalize_impl(const KernelMatrix &k, bool allow_empty) {
  const std::size_t n = k.size();
  std::vector<double> scale(n);
  std::vector<bool> empty(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = k.values(i, i);
    if (!(d > 0.0)) {
      if (!allow_empty || d != 0.0)
        throw std::invalid_argument("kernel diagonal entry " +
                                    std::to_string(i) + " is not positive");
      empty[i] = true;
      scale[i] = 0.0;
    } else {
      scale[i] = std::sqrt(d);
    }
  }
  KernelMatrix out { MatrixD(n, n, 0.0), k.ids, k.tag + ":normalized" };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double v;
      if (i == j)
        v = 1.0;
      else if (empty[i] || empty[j])
        v = 0.0;
      else
        v = k.values(i, j) / (scale[i] * scale[j]);
      out.values(i, j) = v;
      out.values(j, i) = v;
    }
  }
  return out;
}

}  // namespace

KernelMatrix normalize_kernel(const KernelMatrix &k) {
  return normalize_impl(k, false);
}

KernelMatrix normalize_kernel_allow_empty(const KernelMatrix &k) {
  return normalize_impl(k, true);
}

KernelType parse_kernel_type(const std::string &name) {
  if (name == "wl")
    return KernelType::kWL;
  if (name == "wloa" || name == "wl-oa")
    return KernelType::kWLOA;
  if (name == "sp" || name == "shortest_path" || name == "shortest-path")
    return KernelType::kShortestPath;
  if (name == "propagation" || name == "prop")
    return KernelType::kPropagation;
  throw std::invalid_argument("unknown kernel type '" + name + "'");
}

std::string kernel_type_name(KernelType type) {
  switch (type) {
  case KernelType::kWL:
    return "wl";
  case KernelType::kWLOA:
    return "wloa";
  case KernelType::kShortestPath:
    return "shortest_path";
  case KernelType::kPropagation:
    return "propagation";
  }
  return "?";
}

std::string KernelSpec::tag() const {
  std::string t = kernel_type_name(type);
  switch (type) {
  case KernelType::kWL:
  case KernelType::kWLOA:
    t += ":h=" + std::to_string(h);
    break;
  case KernelType::kShortestPath:
    break;
  case KernelType::kPropagation:
    t += ":t=" + std::to_string(t_max) + ":w=" + format_double(bin_width) +
         ":seed=" + std::to_string(seed);
    break;
  }
  return t;
}

KernelMatrix compute_kernel(const KernelSpec &spec,
                            std::span<const Molecule> molecules,
                            std::span<const std::size_t> dictionary_rows,
                            int threads) {
  const int h = (spec.type == KernelType::kWL || spec.type == KernelType::kWLOA)
                    ? spec.h
                    : 0;
  WLDictionary dict(h);
  WLLabeling labeling;
  if (dictionary_rows.empty()) {
    labeling = dict.fit_transform(molecules);
  } else {
    std::vector<Molecule> fit;
    fit.reserve(dictionary_rows.size());
    for (std::size_t r: dictionary_rows)
      fit.push_back(molecules[r]);
    dict.fit_transform(fit);
    labeling = dict.transform(molecules);
  }

  std::vector<SparseHistogram> hists;
  switch (spec.type) {
  case KernelType::kWL:
  case KernelType::kWLOA:
    hists = wl_histograms(labeling);
    break;
  case KernelType::kShortestPath:
    hists = shortest_path_histograms(molecules, labeling);
    break;
  case KernelType::kPropagation:
    hists = propagation_histograms(molecules, labeling, spec.t_max,
                                   spec.bin_width, spec.seed);
    break;
  }

  KernelMatrix k;
  k.values = spec.type == KernelType::kWLOA
                 ? histogram_intersection_matrix(hists, threads)
                 : histogram_dot_matrix(hists, threads);
  k.ids = index_ids(molecules.size());
  k.tag = spec.tag();
  if (spec.normalize)
    k = normalize_kernel_allow_empty(k);
  return k;
}

std::string kernel_to_csv(const KernelMatrix &k) {
  std::string out = "id";
  for (const auto &id: k.ids)
    out += "," + id;
  out += '\n';
  for (std::size_t i = 0; i < k.size(); ++i) {
    out += k.ids[i];
    for (std::size_t j = 0; j < k.size(); ++j)
      out += "," + format_double(k.values(i, j));
    out += '\n';
  }
  return out;
}

}  // namespace pestgraph
