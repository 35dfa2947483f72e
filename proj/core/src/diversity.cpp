//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/diversity.h"

#include <cmath>
#include <stdexcept>

#include "pestgraph/csv.h"
#include "pestgraph/format.h"
#include "pestgraph/parallel.h"

namespace pestgraph {

DiversityStats intra_dataset_diversity(std::span<const FingerprintVector> fps,
                                       int threads) {
  const std::size_t n = fps.size();
  if (n < 2)
    throw std::invalid_argument(
        "intra-dataset diversity needs at least 2 molecules");
  const MatrixD sim = bulk_tanimoto_matrix(fps, fps, threads);
  DiversityStats s;
  double sum = 0, sq = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      sum += sim(i, j);
      sq += sim(i, j) * sim(i, j);
    }
  s.pairs = n * (n - 1) / 2;
  s.mean = sum / static_cast<double>(s.pairs);
  s.std = std::sqrt(std::max(0.0, sq / static_cast<double>(s.pairs) -
                                      s.mean * s.mean));
  return s;
}

std::vector<FingerprintVector> diversity_fingerprints(const MoleculeSet &set,
                                                      int threads) {
  std::vector<FingerprintVector> fps(set.size());
  parallel_for(set.size(), threads, [&](std::size_t i) {
    fps[i] = ecfp(set.records[i].mol, 2, 2048, false);
  });
  return fps;
}

SimilarityMatrix inter_dataset_similarity_matrix(
    std::span<const NamedFingerprints> datasets, int threads,
    bool singleton_diagonal_one) {
  const std::size_t m = datasets.size();
  SimilarityMatrix out;
  out.values = MatrixD(m, m);
  for (const auto &d: datasets) {
    if (d.fps.empty())
      throw std::invalid_argument("dataset '" + d.name + "' is empty");
    out.names.push_back(d.name);
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (datasets[a].fps.size() == 1) {
      if (!singleton_diagonal_one)
        throw std::invalid_argument("dataset '" + datasets[a].name +
                                    "' has a single molecule");
      out.values(a, a) = 1.0;
    } else {
      out.values(a, a) = intra_dataset_diversity(datasets[a].fps, threads).mean;
    }
    for (std::size_t b = a + 1; b < m; ++b) {
      const MatrixD sim =
          bulk_tanimoto_matrix(datasets[a].fps, datasets[b].fps, threads);
      double sum = 0;
      for (double v: sim.data())
        sum += v;
      const double mean = sum / static_cast<double>(sim.data().size());
      out.values(a, b) = mean;
      out.values(b, a) = mean;
    }
  }
  return out;
}

std::string similarity_matrix_to_csv(const SimilarityMatrix &m) {
  std::vector<std::string> header { "dataset" };
  header.insert(header.end(), m.names.begin(), m.names.end());
  std::string out = csv_join(header) + "\n";
  for (std::size_t i = 0; i < m.names.size(); ++i) {
    out += csv_escape(m.names[i]);
    for (std::size_t j = 0; j < m.names.size(); ++j)
      out += "," + format_double(m.values(i, j));
    out += "\n";
  }
  return out;
}

}  // namespace pestgraph
