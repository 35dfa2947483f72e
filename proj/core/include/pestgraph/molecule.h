//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_MOLECULE_H_
#define PESTGRAPH_MOLECULE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pestgraph {

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
  kAromatic = 4,
};

// Stable small-integer code used wherever a bond order enters a hash or a
// label.
constexpr int bond_code(BondOrder order) { return static_cast<int>(order); }

// Contribution of a bond to the valence of its endpoints when counting
// implicit hydrogens. Aromatic bonds count 1; the extra aromatic electron is
// accounted per atom.
constexpr int valence_contribution(BondOrder order) {
  return order == BondOrder::kAromatic ? 1 : static_cast<int>(order);
}

struct Atom {
  int element = 6;  // atomic number
  int formal_charge = 0;
  std::optional<int> isotope;
  int hydrogens = 0;  // attached (implicit + bracket-stated) H count
  bool aromatic = false;
  int index = 0;

  friend bool operator==(const Atom &, const Atom &) = default;
};

struct Bond {
  int begin = 0;
  int end = 0;
  BondOrder order = BondOrder::kSingle;

  int other(int atom) const { return atom == begin ? end : begin; }

  friend bool operator==(const Bond &, const Bond &) = default;
};

struct Neighbor {
  int atom;
  int bond;
};

class InvalidMolecule: public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Attributed, possibly disconnected, simple graph. Immutable after
// construction; the constructor validates the graph invariants and throws
// InvalidMolecule if any is violated.
class Molecule {
public:
  Molecule() = default;
  Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds,
           std::string source_smiles = {});

  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }
  bool empty() const { return atoms_.empty(); }

  const std::vector<Atom> &atoms() const { return atoms_; }
  const std::vector<Bond> &bonds() const { return bonds_; }
  const Atom &atom(int i) const { return atoms_[i]; }
  const Bond &bond(int i) const { return bonds_[i]; }

  std::span<const Neighbor> neighbors(int atom) const {
    return { adjacency_.data() + offsets_[atom],
             adjacency_.data() + offsets_[atom + 1] };
  }
  int degree(int atom) const { return offsets_[atom + 1] - offsets_[atom]; }
  int heavy_degree(int atom) const;

  // Bond index between a and b, if any.
  std::optional<int> bond_between(int a, int b) const;

  const std::string &source_smiles() const { return source_smiles_; }

private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<int> offsets_ { 0 };
  std::vector<Neighbor> adjacency_;
  std::string source_smiles_;
};

// Hydrogen count implied by the default valence model for an atom written
// without brackets. `valence` is the sum of valence_contribution() over the
// atom's bonds. Atoms outside the organic subset, or whose valence exceeds
// every allowed state, get 0.
int implicit_hydrogens(int element, bool aromatic, int valence);

// Same, evaluated for atom `i` of an existing molecule.
int implicit_hydrogens(const Molecule &mol, int i);

// Returns a copy where old atom i becomes new atom new_index[i]. Bond order
// and direction are preserved; bonds are re-listed by their new endpoints.
Molecule permute_atoms(const Molecule &mol, std::span<const int> new_index);

// Induced subgraph over `atoms` (in the given order), reindexed from zero.
Molecule induced_subgraph(const Molecule &mol, std::span<const int> atoms);

}  // namespace pestgraph

#endif  // PESTGRAPH_MOLECULE_H_
