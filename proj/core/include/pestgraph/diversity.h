//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_DIVERSITY_H_
#define PESTGRAPH_DIVERSITY_H_

#include <span>
#include <string>
#include <vector>

#include "pestgraph/fingerprints.h"
#include "pestgraph/matrix.h"
#include "pestgraph/molset.h"

namespace pestgraph {

struct DiversityStats {
  double mean = 0.0;
  double std = 0.0;  // population std over pairs
  std::size_t pairs = 0;
};

// Mean binary Tanimoto over unordered distinct pairs. Throws
// std::invalid_argument for fewer than 2 fingerprints.
DiversityStats intra_dataset_diversity(std::span<const FingerprintVector> fps,
                                       int threads = 1);

// ECFP4 / 2048-bit fingerprints of every record.
std::vector<FingerprintVector> diversity_fingerprints(const MoleculeSet &set,
                                                      int threads = 1);

struct NamedFingerprints {
  std::string name;
  std::vector<FingerprintVector> fps;
};

struct SimilarityMatrix {
  std::vector<std::string> names;
  MatrixD values;
};

// Entry (i, j): mean Tanimoto over dataset_i x dataset_j, with the diagonal
// using the intra-dataset definition. A single-molecule dataset's diagonal is
// 1.0 when singleton_diagonal_one is set, otherwise it throws.
SimilarityMatrix inter_dataset_similarity_matrix(
    std::span<const NamedFingerprints> datasets, int threads = 1,
    bool singleton_diagonal_one = true);

// CSV: "dataset,<name0>,<name1>,..." then one row per dataset.
std::string similarity_matrix_to_csv(const SimilarityMatrix &m);

}  // namespace pestgraph

#endif  // PESTGRAPH_DIVERSITY_H_
