//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/molecule.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "pestgraph/elements.h"

namespace pestgraph {

Molecule::Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds,
                   std::string source_smiles)
    : atoms_(std::move(atoms)), bonds_(std::move(bonds)),
      source_smiles_(std::move(source_smiles)) {
  const int n = num_atoms();
  for (int i = 0; i < n; ++i) {
    const Atom &a = atoms_[i];
    if (a.index != i)
      throw InvalidMolecule("atom index " + std::to_string(a.index) +
                            " at position " + std::to_string(i));
    if (element_symbol(a.element).empty())
      throw InvalidMolecule("invalid atomic number " +
                            std::to_string(a.element));
    if (a.hydrogens < 0 || (a.isotope && *a.isotope < 0))
      throw InvalidMolecule("negative hydrogen count or isotope");
  }

  std::set<std::pair<int, int>> seen;
  std::vector<int> counts(n + 1, 0);
  for (const Bond &b: bonds_) {
    if (b.begin < 0 || b.begin >= n || b.end < 0 || b.end >= n)
      throw InvalidMolecule("bond endpoint out of range");
    if (b.begin == b.end)
      throw InvalidMolecule("self-loop on atom " + std::to_string(b.begin));
    auto key = std::minmax(b.begin, b.end);
    if (!seen.insert(key).second)
      throw InvalidMolecule("duplicate bond " + std::to_string(key.first) +
                            "-" + std::to_string(key.second));
    ++counts[b.begin + 1];
    ++counts[b.end + 1];
  }

  offsets_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i)
    offsets_[i + 1] = offsets_[i] + counts[i + 1];
  adjacency_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int bi = 0; bi < num_bonds(); ++bi) {
    const Bond &b = bonds_[bi];
    adjacency_[fill[b.begin]++] = { b.end, bi };
    adjacency_[fill[b.end]++] = { b.begin, bi };
  }
}

int Molecule::heavy_degree(int atom) const {
  int d = 0;
  for (const Neighbor &nb: neighbors(atom))
    d += atoms_[nb.atom].element != 1;
  return d;
}

std::optional<int> Molecule::bond_between(int a, int b) const {
  for (const Neighbor &nb: neighbors(a))
    if (nb.atom == b)
      return nb.bond;
  return std::nullopt;
}

int implicit_hydrogens(int element, bool aromatic, int valence) {
  auto allowed = default_valences(element);
  if (allowed.empty())
    return 0;
  // b, c, n and p donate one electron to the aromatic system; aromatic o and s
  // contribute a lone pair and keep their sigma valence.
  if (aromatic && (element == 5 || element == 6 || element == 7 ||
                   element == 15))
    ++valence;
  for (int v: allowed)
    if (v >= valence)
      return v - valence;
  return 0;
}

int implicit_hydrogens(const Molecule &mol, int i) {
  int valence = 0;
  for (const Neighbor &nb: mol.neighbors(i))
    valence += valence_contribution(mol.bond(nb.bond).order);
  const Atom &a = mol.atom(i);
  return implicit_hydrogens(a.element, a.aromatic, valence);
}

Molecule permute_atoms(const Molecule &mol, std::span<const int> new_index) {
  const int n = mol.num_atoms();
  if (static_cast<int>(new_index.size()) != n)
    throw InvalidMolecule("permutation size mismatch");
  std::vector<Atom> atoms(n);
  for (int i = 0; i < n; ++i) {
    Atom a = mol.atom(i);
    a.index = new_index[i];
    atoms[new_index[i]] = a;
  }
  std::vector<Bond> bonds;
  bonds.reserve(mol.num_bonds());
  for (const Bond &b: mol.bonds())
    bonds.push_back({ new_index[b.begin], new_index[b.end], b.order });
  std::sort(bonds.begin(), bonds.end(), [](const Bond &x, const Bond &y) {
    return std::minmax(x.begin, x.end) < std::minmax(y.begin, y.end);
  });
  return { std::move(atoms), std::move(bonds), mol.source_smiles() };
}

Molecule induced_subgraph(const Molecule &mol, std::span<const int> atoms) {
  std::vector<int> remap(mol.num_atoms(), -1);
  std::vector<Atom> out_atoms;
  out_atoms.reserve(atoms.size());
  for (int i: atoms) {
    remap[i] = static_cast<int>(out_atoms.size());
    Atom a = mol.atom(i);
    a.index = remap[i];
    out_atoms.push_back(a);
  }
  std::vector<Bond> out_bonds;
  for (const Bond &b: mol.bonds())
    if (remap[b.begin] >= 0 && remap[b.end] >= 0)
      out_bonds.push_back({ remap[b.begin], remap[b.end], b.order });
  return { std::move(out_atoms), std::move(out_bonds) };
}

}  // namespace pestgraph
