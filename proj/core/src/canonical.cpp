//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/canonical.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pestgraph/elements.h"
#include "pestgraph/graph.h"

namespace pestgraph {
namespace {

// Leaves of the individualization search explored before settling for the
// best string found so far. Only highly symmetric structures reach it.
constexpr int kLeafBudget = 256;

template <class Key>
std::vector<int> dense_ranks(const std::vector<Key> &keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> ranks(keys.size());
  int r = -1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || keys[order[k - 1]] < keys[order[k]])
      ++r;
    ranks[order[k]] = r;
  }
  return ranks;
}

int class_count(const std::vector<int> &ranks) {
  return ranks.empty() ? 0
                       : *std::max_element(ranks.begin(), ranks.end()) + 1;
}

std::vector<int> initial_ranks(const Molecule &mol) {
  using Inv = std::array<int, 6>;
  std::vector<Inv> keys;
  keys.reserve(mol.num_atoms());
  for (const Atom &a: mol.atoms())
    keys.push_back({ a.element, a.formal_charge, a.isotope.value_or(-1),
                     a.hydrogens, a.aromatic ? 1 : 0, mol.degree(a.index) });
  return dense_ranks(keys);
}

std::vector<int> refine(const Molecule &mol, std::vector<int> ranks) {
  using Key = std::pair<int, std::vector<std::pair<int, int>>>;
  int classes = class_count(ranks);
  const int n = mol.num_atoms();
  while (classes < n) {
    std::vector<Key> keys(n);
    for (int i = 0; i < n; ++i) {
      keys[i].first = ranks[i];
      auto &env = keys[i].second;
      for (const Neighbor &nb: mol.neighbors(i))
        env.emplace_back(bond_code(mol.bond(nb.bond).order), ranks[nb.atom]);
      std::sort(env.begin(), env.end());
    }
    auto next = dense_ranks(keys);
    const int next_classes = class_count(next);
    ranks = std::move(next);
    if (next_classes == classes)
      break;
    classes = next_classes;
  }
  return ranks;
}

std::string atom_text(const Molecule &mol, int i) {
  const Atom &a = mol.atom(i);
  std::string sym(element_symbol(a.element));
  const bool lower = a.aromatic && may_be_aromatic(a.element);
  if (lower)
    sym[0] = static_cast<char>(std::tolower(sym[0]));

  const bool organic_aromatic_ok =
      !lower || a.element == 5 || a.element == 6 || a.element == 7 ||
      a.element == 8 || a.element == 15 || a.element == 16;
  if (is_organic_subset(a.element) && organic_aromatic_ok &&
      a.formal_charge == 0 && !a.isotope &&
      a.hydrogens == implicit_hydrogens(mol, i))
    return sym;

  std::string out = "[";
  if (a.isotope)
    out += std::to_string(*a.isotope);
  out += sym;
  if (a.hydrogens == 1)
    out += 'H';
  else if (a.hydrogens > 1)
    out += 'H' + std::to_string(a.hydrogens);
  if (a.formal_charge != 0) {
    out += a.formal_charge > 0 ? '+' : '-';
    const int mag = a.formal_charge > 0 ? a.formal_charge : -a.formal_charge;
    if (mag > 1)
      out += std::to_string(mag);
  }
  out += ']';
  return out;
}

std::string bond_text(const Molecule &mol, const Bond &b) {
  const bool both_aromatic =
      mol.atom(b.begin).aromatic && mol.atom(b.end).aromatic;
  switch (b.order) {
  case BondOrder::kSingle:
    return both_aromatic ? "-" : "";
  case BondOrder::kDouble:
    return "=";
  case BondOrder::kTriple:
    return "#";
  case BondOrder::kAromatic:
    return both_aromatic ? "" : ":";
  }
  return "";
}

std::string ring_label(int number) {
  if (number < 10)
    return std::string(1, static_cast<char>('0' + number));
  return "%" + std::to_string(number);
}

class SmilesWriter {
public:
  SmilesWriter(const Molecule &mol, const std::vector<int> &ranks)
      : mol_(mol), ranks_(ranks), visited_(mol.num_atoms(), false),
        ring_bond_(mol.num_bonds(), false), children_(mol.num_atoms()),
        opens_(mol.num_atoms()), closes_(mol.num_atoms()),
        ring_number_(mol.num_bonds(), -1) { }

  std::string write_component(int root) {
    plan(root, -1);
    std::string out;
    emit(root, out);
    return out;
  }

private:
  std::vector<Neighbor> sorted_neighbors(int a) const {
    auto nbs = mol_.neighbors(a);
    std::vector<Neighbor> v(nbs.begin(), nbs.end());
    std::sort(v.begin(), v.end(), [&](const Neighbor &x, const Neighbor &y) {
      return ranks_[x.atom] < ranks_[y.atom];
    });
    return v;
  }

  // Pass 1: DFS fixing tree edges and which bonds are written as closures.
  void plan(int a, int parent_bond) {
    visited_[a] = true;
    for (const Neighbor &nb: sorted_neighbors(a)) {
      if (nb.bond == parent_bond)
        continue;
      if (!visited_[nb.atom]) {
        children_[a].push_back(nb);
        plan(nb.atom, nb.bond);
      } else if (!ring_bond_[nb.bond]) {
        ring_bond_[nb.bond] = true;
        opens_[nb.atom].push_back(nb.bond);
        closes_[a].push_back(nb.bond);
      }
    }
  }

  int other_rank(int bond, int a) const {
    return ranks_[mol_.bond(bond).other(a)];
  }

  void emit(int a, std::string &out) {
    out += atom_text(mol_, a);

    auto by_other = [&](int x, int y) { return other_rank(x, a) < other_rank(y, a); };
    std::sort(opens_[a].begin(), opens_[a].end(), by_other);
    std::sort(closes_[a].begin(), closes_[a].end(), by_other);

    for (int b: opens_[a]) {
      int num = 1;
      while (in_use_.count(num))
        ++num;
      in_use_.insert(num);
      ring_number_[b] = num;
      out += bond_text(mol_, mol_.bond(b));
      out += ring_label(num);
    }
    for (int b: closes_[a]) {
      out += ring_label(ring_number_[b]);
      in_use_.erase(ring_number_[b]);
    }

    const auto &kids = children_[a];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      const bool last = k + 1 == kids.size();
      if (!last)
        out += '(';
      out += bond_text(mol_, mol_.bond(kids[k].bond));
      emit(kids[k].atom, out);
      if (!last)
        out += ')';
    }
  }

  const Molecule &mol_;
  const std::vector<int> &ranks_;
  std::vector<bool> visited_;
  std::vector<bool> ring_bond_;
  std::vector<std::vector<Neighbor>> children_;
  std::vector<std::vector<int>> opens_;
  std::vector<std::vector<int>> closes_;
  std::vector<int> ring_number_;
  std::set<int> in_use_;
};

std::string write_connected(const Molecule &mol, const std::vector<int> &ranks) {
  // Start from a terminal atom when there is one: lowest rank among the
  // atoms of minimal degree.
  int root = 0;
  for (int i = 1; i < mol.num_atoms(); ++i) {
    const int di = mol.degree(i), dr = mol.degree(root);
    if (di < dr || (di == dr && ranks[i] < ranks[root]))
      root = i;
  }
  return SmilesWriter(mol, ranks).write_component(root);
}

class CanonicalSearch {
public:
  explicit CanonicalSearch(const Molecule &mol): mol_(mol) { }

  std::string run() {
    visit(initial_ranks(mol_));
    return *best_;
  }

private:
  void visit(std::vector<int> ranks) {
    ranks = refine(mol_, std::move(ranks));
    const int n = mol_.num_atoms();
    if (class_count(ranks) == n) {
      std::string s = write_connected(mol_, ranks);
      if (!best_ || s < *best_)
        best_ = std::move(s);
      ++leaves_;
      return;
    }

    // Lowest-ranked tied cell.
    std::vector<int> sizes(class_count(ranks), 0);
    for (int r: ranks)
      ++sizes[r];
    int cell = 0;
    while (sizes[cell] < 2)
      ++cell;

    for (int a = 0; a < n; ++a) {
      if (ranks[a] != cell)
        continue;
      if (best_ && leaves_ >= kLeafBudget)
        return;
      std::vector<int> split(n);
      for (int i = 0; i < n; ++i)
        split[i] = 2 * ranks[i] + (ranks[i] == cell && i != a ? 1 : 0);
      visit(dense_ranks(split));
    }
  }

  const Molecule &mol_;
  std::optional<std::string> best_;
  int leaves_ = 0;
};

}  // namespace

std::vector<int> refined_atom_classes(const Molecule &mol) {
  return refine(mol, initial_ranks(mol));
}

std::string write_smiles(const Molecule &mol, const std::vector<int> &ranks) {
  std::string out;
  for (const auto &atoms: component_atom_sets(mol)) {
    std::vector<int> local;
    local.reserve(atoms.size());
    for (int i: atoms)
      local.push_back(ranks[i]);
    Molecule frag = induced_subgraph(mol, atoms);
    if (!out.empty())
      out += '.';
    out += write_connected(frag, dense_ranks(local));
  }
  return out;
}

std::string canonical_smiles(const Molecule &mol) {
  std::vector<std::string> parts;
  for (const auto &atoms: component_atom_sets(mol)) {
    Molecule frag = induced_subgraph(mol, atoms);
    parts.push_back(CanonicalSearch(frag).run());
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto &p: parts) {
    if (!out.empty())
      out += '.';
    out += p;
  }
  return out;
}

}  // namespace pestgraph
