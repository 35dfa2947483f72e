//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_GRAPH_H_
#define PESTGRAPH_GRAPH_H_

#include <vector>

#include "pestgraph/matrix.h"
#include "pestgraph/molecule.h"

namespace pestgraph {

inline constexpr int kUnreachable = -1;

// Hop counts between every atom pair; kUnreachable across components.
DenseMatrix<int> topological_distance_matrix(const Molecule &mol);

struct RingFlags {
  std::vector<bool> atoms;
  std::vector<bool> bonds;
};

// An atom or bond is flagged iff it lies on at least one cycle. A bond is in
// a ring iff it is not a bridge; an atom iff it touches a ring bond.
RingFlags ring_flags(const Molecule &mol);

// Component id per atom, numbered in order of each component's lowest atom
// index.
std::vector<int> component_labels(const Molecule &mol);

// Atom index sets of the connected components, each sorted ascending, listed
// in order of their lowest atom index.
std::vector<std::vector<int>> component_atom_sets(const Molecule &mol);

// Connected components as standalone molecules, ordered by decreasing atom
// count and then by canonical SMILES.
std::vector<Molecule> connected_components(const Molecule &mol);

}  // namespace pestgraph

#endif  // PESTGRAPH_GRAPH_H_
