//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_KERNELS_H_
#define PESTGRAPH_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pestgraph/matrix.h"
#include "pestgraph/molecule.h"

namespace pestgraph {

struct KernelMatrix {
  MatrixD values;
  std::vector<std::string> ids;
  std::string tag;

  std::size_t size() const { return values.rows(); }
};

// Sparse feature histogram, sorted by key.
using SparseHistogram = std::vector<std::pair<std::uint64_t, double>>;

// Per-iteration WL labels: labels[iteration][molecule][atom]. Label 0 is
// reserved for environments the dictionary has never seen.
struct WLLabeling {
  int iterations = 0;  // h; labels has h + 1 layers
  std::vector<std::vector<std::vector<int>>> labels;
  std::vector<int> alphabet_sizes;  // per iteration, including label 0
};

// Injective WL relabeling dictionary. Codes are assigned in first-encounter
// order (molecules in input order, atoms in index order), so a fixed input
// always yields the same labels.
class WLDictionary {
public:
  explicit WLDictionary(int h);

  int iterations() const { return h_; }

  // Labels `molecules`, adding unseen environments to the dictionary.
  WLLabeling fit_transform(std::span<const Molecule> molecules);

  // Labels `molecules` without growing; unseen environments map to 0.
  WLLabeling transform(std::span<const Molecule> molecules) const;

private:
  using Key = std::vector<std::int64_t>;
  WLLabeling label(std::span<const Molecule> molecules,
                   std::vector<std::map<Key, int>> *grow) const;

  int h_;
  std::vector<std::map<Key, int>> codes_;
};

// Iteration 0 label: (element, charge, aromatic). Iteration i: code of
// (previous label, sorted multiset of (bond order, neighbor previous label)).
WLLabeling wl_relabel(std::span<const Molecule> molecules, int h);

std::vector<SparseHistogram> wl_histograms(const WLLabeling &labeling);
std::vector<SparseHistogram> shortest_path_histograms(
    std::span<const Molecule> molecules, const WLLabeling &labeling);
std::vector<SparseHistogram> propagation_histograms(
    std::span<const Molecule> molecules, const WLLabeling &labeling, int t_max,
    double bin_width, std::uint64_t seed);

// Gram matrices over histograms; symmetric by construction.
MatrixD histogram_dot_matrix(std::span<const SparseHistogram> hists,
                             int threads = 1);
MatrixD histogram_intersection_matrix(std::span<const SparseHistogram> hists,
                                      int threads = 1);

KernelMatrix wl_kernel_matrix(std::span<const Molecule> molecules, int h,
                              int threads = 1);
KernelMatrix wloa_kernel_matrix(std::span<const Molecule> molecules, int h,
                                int threads = 1);
KernelMatrix shortest_path_kernel_matrix(std::span<const Molecule> molecules,
                                         int threads = 1);
KernelMatrix propagation_kernel_matrix(std::span<const Molecule> molecules,
                                       int t_max, double bin_width,
                                       std::uint64_t seed, int threads = 1);

// K(i,j) / sqrt(K(i,i) K(j,j)), diagonal exactly 1. Throws
// std::invalid_argument on a non-positive diagonal entry.
KernelMatrix normalize_kernel(const KernelMatrix &k);

// As normalize_kernel, but rows with a zero diagonal (molecules with an empty
// feature histogram, e.g. single atoms under the shortest-path kernel) get a
// unit diagonal and zero off-diagonal entries.
KernelMatrix normalize_kernel_allow_empty(const KernelMatrix &k);

enum class KernelType { kWL, kWLOA, kShortestPath, kPropagation };

KernelType parse_kernel_type(const std::string &name);
std::string kernel_type_name(KernelType type);

struct KernelSpec {
  KernelType type = KernelType::kWLOA;
  int h = 3;
  int t_max = 3;
  double bin_width = 0.05;
  std::uint64_t seed = 0;
  bool normalize = true;

  std::string tag() const;
};

// Kernel over `molecules`. When dictionary_rows is non-empty, the WL label
// dictionary is built from those molecules only and everything else is
// mapped through it.
KernelMatrix compute_kernel(const KernelSpec &spec,
                            std::span<const Molecule> molecules,
                            std::span<const std::size_t> dictionary_rows = {},
                            int threads = 1);

// CSV: header "id,<id0>,<id1>,..." then one row per molecule.
std::string kernel_to_csv(const KernelMatrix &k);

}  // namespace pestgraph

#endif  // PESTGRAPH_KERNELS_H_
