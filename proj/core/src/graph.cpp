//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/graph.h"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "pestgraph/canonical.h"

namespace pestgraph {

DenseMatrix<int> topological_distance_matrix(const Molecule &mol) {
  const int n = mol.num_atoms();
  DenseMatrix<int> dist(n, n, kUnreachable);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    auto row = dist.row(s);
    row[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      for (const Neighbor &nb: mol.neighbors(u)) {
        if (row[nb.atom] == kUnreachable) {
          row[nb.atom] = row[u] + 1;
          queue[tail++] = nb.atom;
        }
      }
    }
  }
  return dist;
}

RingFlags ring_flags(const Molecule &mol) {
  const int n = mol.num_atoms();
  RingFlags flags { std::vector<bool>(n, false),
                    std::vector<bool>(mol.num_bonds(), true) };

  // Iterative Tarjan bridge finding; low-link over DFS discovery times.
  std::vector<int> disc(n, -1), low(n, 0);
  struct Frame {
    int atom;
    int parent_bond;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int time = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0)
      continue;
    disc[root] = low[root] = time++;
    stack.push_back({ root, -1, 0 });
    while (!stack.empty()) {
      Frame &f = stack.back();
      auto nbs = mol.neighbors(f.atom);
      if (f.next < nbs.size()) {
        const Neighbor nb = nbs[f.next++];
        if (nb.bond == f.parent_bond)
          continue;
        if (disc[nb.atom] < 0) {
          disc[nb.atom] = low[nb.atom] = time++;
          stack.push_back({ nb.atom, nb.bond, 0 });
        } else {
          low[f.atom] = std::min(low[f.atom], disc[nb.atom]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          const int parent = stack.back().atom;
          low[parent] = std::min(low[parent], low[done.atom]);
          if (low[done.atom] > disc[parent])
            flags.bonds[done.parent_bond] = false;
        }
      }
    }
  }

  for (int b = 0; b < mol.num_bonds(); ++b) {
    if (flags.bonds[b]) {
      flags.atoms[mol.bond(b).begin] = true;
      flags.atoms[mol.bond(b).end] = true;
    }
  }
  return flags;
}

std::vector<int> component_labels(const Molecule &mol) {
  const int n = mol.num_atoms();
  std::vector<int> label(n, -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0)
      continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const Neighbor &nb: mol.neighbors(u)) {
        if (label[nb.atom] < 0) {
          label[nb.atom] = next;
          stack.push_back(nb.atom);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<int>> component_atom_sets(const Molecule &mol) {
  const auto label = component_labels(mol);
  int count = 0;
  for (int l: label)
    count = std::max(count, l + 1);
  std::vector<std::vector<int>> sets(count);
  for (int i = 0; i < mol.num_atoms(); ++i)
    sets[label[i]].push_back(i);
  return sets;
}

std::vector<Molecule> connected_components(const Molecule &mol) {
  std::vector<std::pair<std::string, Molecule>> parts;
  for (const auto &atoms: component_atom_sets(mol)) {
    Molecule frag = induced_subgraph(mol, atoms);
    std::string key = canonical_smiles(frag);
    parts.emplace_back(std::move(key), std::move(frag));
  }
  std::stable_sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) {
    if (a.second.num_atoms() != b.second.num_atoms())
      return a.second.num_atoms() > b.second.num_atoms();
    return a.first < b.first;
  });
  std::vector<Molecule> out;
  out.reserve(parts.size());
  for (auto &p: parts)
    out.push_back(std::move(p.second));
  return out;
}

}  // namespace pestgraph
