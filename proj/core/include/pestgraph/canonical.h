//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_CANONICAL_H_
#define PESTGRAPH_CANONICAL_H_

#include <string>
#include <vector>

#include "pestgraph/molecule.h"

namespace pestgraph {

// Canonical SMILES: a string that depends only on the isomorphism class of
// the attributed graph (element, charge, isotope, H count, aromatic flag and
// bond orders). Components are canonicalized independently and joined in
// lexicographic order, so component order in the input does not matter.
//
// parse_smiles(canonical_smiles(m)) reproduces m up to atom order, and
// canonical_smiles of that is byte-identical.
std::string canonical_smiles(const Molecule &mol);

// Morgan-style refinement of atom ranks: starting from the invariant tuple
// (element, charge, isotope, H count, aromatic flag, degree), ranks are
// repeatedly split by the sorted multiset of (bond order, neighbor rank) until
// the partition is stable. Ranks are dense, starting at 0. Tied atoms remain
// tied; this is the equitable partition, not a canonical labeling.
std::vector<int> refined_atom_classes(const Molecule &mol);

// SMILES text for a connected or disconnected molecule using the given
// atom ranks to pick traversal start and branch order. Ranks must be
// distinct within each component. Mostly useful for tests and tooling.
std::string write_smiles(const Molecule &mol, const std::vector<int> &ranks);

}  // namespace pestgraph

#endif  // PESTGRAPH_CANONICAL_H_
