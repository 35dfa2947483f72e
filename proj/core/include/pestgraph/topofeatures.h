//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_TOPOFEATURES_H_
#define PESTGRAPH_TOPOFEATURES_H_

#include <string>
#include <vector>

#include "pestgraph/molecule.h"

namespace pestgraph {

// Fixed-length real vector with named slots. The schema depends only on the
// featurizer configuration.
struct FeatureVector {
  std::vector<double> values;
  std::vector<std::string> schema;
};

// Fixed-range histogram: values are clamped into [lo, hi] and the top edge is
// inclusive. Returns `bins` counts.
std::vector<double> fixed_histogram(const std::vector<double> &values,
                                    int bins, double lo, double hi);

// Per-atom inputs to ltp_features(), exposed for testing. Degenerate
// statistics (isolated atoms) are 0.
struct AtomTopology {
  std::vector<double> degree;
  std::vector<double> min_neighbor_degree;
  std::vector<double> max_neighbor_degree;
  std::vector<double> mean_neighbor_degree;
  std::vector<double> std_neighbor_degree;
  std::vector<double> mean_jaccard;  // mean over incident edges
  std::vector<double> local_degree_score;
};

AtomTopology atom_topology(const Molecule &mol);

// Local topological profile: histograms of the AtomTopology descriptors over
// the molecule, concatenated. bins >= 2.
FeatureVector ltp_features(const Molecule &mol, int bins);

// Edge betweenness per bond: number of atom pairs (each unordered pair once)
// whose shortest paths cross the bond, fractional when paths tie. Computed per
// component with Brandes accumulation.
std::vector<double> edge_betweenness(const Molecule &mol);

// Per-edge SCAN structural similarity (|common| + 2) / sqrt((du + 1)(dv + 1)).
std::vector<double> scan_scores(const Molecule &mol);

// Per-edge adjusted Rand index between the closed-neighborhood indicator
// partitions of the two endpoints, over the atoms of the edge's component.
// 0 when undefined.
std::vector<double> edge_ari(const Molecule &mol);

// Histograms of normalized edge betweenness, SCAN and ARI, plus element and
// bond-order counts. bins >= 2.
FeatureVector moltop_features(const Molecule &mol, int bins);

}  // namespace pestgraph

#endif  // PESTGRAPH_TOPOFEATURES_H_
