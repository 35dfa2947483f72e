//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Brute-force reference implementations. None of these call into the
// library code they are used to check; they only read the Molecule graph.

#ifndef PESTGRAPH_TESTS_ORACLES_H_
#define PESTGRAPH_TESTS_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pestgraph/matrix.h"
#include "pestgraph/metrics.h"
#include "pestgraph/molecule.h"
#include "pestgraph/rng.h"

namespace pestgraph::oracle {

// All-pairs BFS distances; -1 for unreachable.
std::vector<std::vector<int>> bfs_distances(const Molecule &mol);

// Connected components via union-find over the bond list, as sorted atom
// sets sorted by first atom.
std::vector<std::vector<int>> union_find_components(const Molecule &mol);

// Bonds lying on at least one simple cycle, by exhaustive cycle enumeration.
std::vector<bool> cycle_bonds(const Molecule &mol);

// Every simple path with `bonds` edges, as atom sequences (each undirected
// path listed once, lexicographically smaller direction first).
std::vector<std::vector<int>> simple_paths(const Molecule &mol, int bonds);

// Maximum-weight perfect assignment on a square matrix (Hungarian method).
double hungarian_max(const std::vector<std::vector<double>> &w);
// Same by enumerating all permutations; n <= 8.
double permutation_max(const std::vector<std::vector<double>> &w);

// Weisfeiler-Lehman colours computed jointly over a set of molecules from
// (element, charge, aromatic) with bond-order-tagged neighbour multisets.
// Result[i][m][atom] for iterations 0..h.
std::vector<std::vector<std::vector<std::string>>> wl_colours(
    const std::vector<Molecule> &mols, int h);

// Optimal-assignment WL kernel: atoms matched one-to-one (smaller side padded
// with dummies), similarity = number of iterations on which colours agree.
double wloa_by_assignment(const Molecule &a, const Molecule &b, int h);

// Subtree WL kernel by explicit colour-count dot products.
double wl_subtree_dot(const Molecule &a, const Molecule &b, int h);

// Shortest-path kernel: count of matching (label_u, d, label_v) triples
// over unordered reachable pairs of each molecule.
double shortest_path_dot(const Molecule &a, const Molecule &b);

// Edge betweenness by enumerating all shortest paths between every pair.
std::vector<double> edge_betweenness_bruteforce(const Molecule &mol);

// Dual of the soft-margin SVM solved by enumerating active sets:
// every variable is 0, C or free; the free block is solved from the KKT
// system. Requires a strictly positive definite kernel. n <= 10.
struct QpSolution {
  std::vector<double> alpha;
  double objective = 0.0;
};
QpSolution svm_dual_bruteforce(const MatrixD &K, const std::vector<int> &y,
                               double C);

// Matthews correlation straight from the textbook formula, with the
// zero-denominator convention.
double mcc_direct(std::int64_t tp, std::int64_t fp, std::int64_t tn,
                  std::int64_t fn);

// AUROC as the fraction of (positive, negative) pairs ranked correctly,
// ties counting one half.
double auroc_pairs(const std::vector<double> &scores,
                   const std::vector<int> &labels);

// Greedy MaxMin replay: repeatedly picks the item whose minimum distance to
// the picked set is largest, lowest index on ties.
std::vector<std::size_t> maxmin_replay(
    const std::vector<std::vector<double>> &dist, std::size_t first,
    std::size_t k);

// Tanimoto of two sets.
double set_tanimoto(const std::vector<std::uint64_t> &a,
                    const std::vector<std::uint64_t> &b);

}  // namespace pestgraph::oracle

#endif  // PESTGRAPH_TESTS_ORACLES_H_
