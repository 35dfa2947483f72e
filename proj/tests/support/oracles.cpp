//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include <Eigen/Dense>

namespace pestgraph::oracle {

namespace {

// Plain adjacency lists straight from the bond list.
std::vector<std::vector<std::pair<int, int>>> adjacency(const Molecule &mol) {
  std::vector<std::vector<std::pair<int, int>>> adj(mol.num_atoms());
  for (int b = 0; b < mol.num_bonds(); ++b) {
    const Bond &bond = mol.bond(b);
    adj[bond.begin].emplace_back(bond.end, b);
    adj[bond.end].emplace_back(bond.begin, b);
  }
  return adj;
}

int find_root(std::vector<int> &parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<std::vector<int>> bfs_distances(const Molecule &mol) {
  const int n = mol.num_atoms();
  const auto adj = adjacency(mol);
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q { s };
    d[s][s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (auto [v, b]: adj[u]) {
        (void)b;
        if (d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push_back(v);
        }
      }
    }
  }
  return d;
}

std::vector<std::vector<int>> union_find_components(const Molecule &mol) {
  const int n = mol.num_atoms();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Bond &b: mol.bonds()) {
    const int ra = find_root(parent, b.begin), rb = find_root(parent, b.end);
    if (ra != rb)
      parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i)
    groups[find_root(parent, i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto &[root, atoms]: groups)
    out.push_back(atoms);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> cycle_bonds(const Molecule &mol) {
  // A bond is on a simple cycle iff some simple path joins its ends without
  // using it; search every start exhaustively.
  const int n = mol.num_atoms();
  const auto adj = adjacency(mol);
  std::vector<bool> on_cycle(mol.num_bonds(), false);
  for (int b = 0; b < mol.num_bonds(); ++b) {
    const int src = mol.bond(b).begin, dst = mol.bond(b).end;
    std::vector<bool> seen(n, false);
    std::function<bool(int)> dfs = [&](int u) {
      if (u == dst)
        return true;
      seen[u] = true;
      for (auto [v, e]: adj[u]) {
        if (e == b || seen[v])
          continue;
        if (dfs(v))
          return true;
      }
      return false;
    };
    on_cycle[b] = dfs(src);
  }
  return on_cycle;
}

std::vector<std::vector<int>> simple_paths(const Molecule &mol, int bonds) {
  const int n = mol.num_atoms();
  const auto adj = adjacency(mol);
  std::set<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  std::function<void(int)> extend = [&](int u) {
    if (static_cast<int>(path.size()) == bonds + 1) {
      std::vector<int> rev(path.rbegin(), path.rend());
      out.insert(std::min(path, rev));
      return;
    }
    for (auto [v, e]: adj[u]) {
      (void)e;
      if (used[v])
        continue;
      used[v] = true;
      path.push_back(v);
      extend(v);
      path.pop_back();
      used[v] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    path = { s };
    extend(s);
    used[s] = false;
  }
  return { out.begin(), out.end() };
}

double hungarian_max(const std::vector<std::vector<double>> &w) {
  // Minimisation form of the O(n^3) potentials algorithm on cost = -w.
  const int n = static_cast<int>(w.size());
  if (n == 0)
    return 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j])
          continue;
        const double cur = -w[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  double total = 0.0;
  for (int j = 1; j <= n; ++j)
    total += w[p[j] - 1][j - 1];
  return total;
}

double permutation_max(const std::vector<std::vector<double>> &w) {
  const std::size_t n = w.size();
  if (n > 8)
    throw std::invalid_argument("permutation_max: n > 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = -std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      s += w[i][perm[i]];
    best = std::max(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0.0 : best;
}

std::vector<std::vector<std::vector<std::string>>> wl_colours(
    const std::vector<Molecule> &mols, int h) {
  std::vector<std::vector<std::vector<std::string>>> out(h + 1);
  out[0].resize(mols.size());
  for (std::size_t m = 0; m < mols.size(); ++m)
    for (const Atom &a: mols[m].atoms())
      out[0][m].push_back(std::to_string(a.element) + "/" +
                          std::to_string(a.formal_charge) + "/" +
                          (a.aromatic ? "a" : "n"));
  for (int it = 1; it <= h; ++it) {
    // Compress the previous layer so strings stay short.
    std::map<std::string, int> code;
    for (const auto &mol_labels: out[it - 1])
      for (const auto &s: mol_labels)
        code.emplace(s, 0);
    int next = 0;
    for (auto &[s, c]: code)
      c = next++;
    out[it].resize(mols.size());
    for (std::size_t m = 0; m < mols.size(); ++m) {
      const Molecule &mol = mols[m];
      const auto adj = adjacency(mol);
      for (int i = 0; i < mol.num_atoms(); ++i) {
        std::vector<std::pair<int, int>> env;
        for (auto [v, b]: adj[i])
          env.emplace_back(static_cast<int>(mol.bond(b).order),
                           code[out[it - 1][m][v]]);
        std::sort(env.begin(), env.end());
        std::string s = std::to_string(code[out[it - 1][m][i]]) + "|";
        for (auto [o, c]: env)
          s += std::to_string(o) + ":" + std::to_string(c) + ",";
        out[it][m].push_back(s);
      }
    }
  }
  return out;
}

double wloa_by_assignment(const Molecule &a, const Molecule &b, int h) {
  const auto colours = wl_colours({ a, b }, h);
  const int na = a.num_atoms(), nb = b.num_atoms();
  const int n = std::max(na, nb);
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int it = 0; it <= h; ++it)
        if (colours[it][0][i] == colours[it][1][j])
          w[i][j] += 1.0;
  return hungarian_max(w);
}

double wl_subtree_dot(const Molecule &a, const Molecule &b, int h) {
  const auto colours = wl_colours({ a, b }, h);
  double k = 0.0;
  for (int it = 0; it <= h; ++it) {
    std::map<std::string, int> ca, cb;
    for (const auto &s: colours[it][0])
      ++ca[s];
    for (const auto &s: colours[it][1])
      ++cb[s];
    for (auto &[s, c]: ca) {
      auto f = cb.find(s);
      if (f != cb.end())
        k += static_cast<double>(c) * f->second;
    }
  }
  return k;
}

double shortest_path_dot(const Molecule &a, const Molecule &b) {
  auto triples = [](const Molecule &mol) {
    const auto d = bfs_distances(mol);
    std::map<std::tuple<std::string, int, std::string>, int> counts;
    auto label = [&](int i) {
      const Atom &x = mol.atom(i);
      return std::to_string(x.element) + "/" + std::to_string(x.formal_charge) +
             "/" + (x.aromatic ? "a" : "n");
    };
    for (int u = 0; u < mol.num_atoms(); ++u)
      for (int v = u + 1; v < mol.num_atoms(); ++v) {
        if (d[u][v] < 0)
          continue;
        auto lu = label(u), lv = label(v);
        if (lv < lu)
          std::swap(lu, lv);
        ++counts[{ lu, d[u][v], lv }];
      }
    return counts;
  };
  const auto ta = triples(a), tb = triples(b);
  double k = 0.0;
  for (auto &[key, c]: ta) {
    auto f = tb.find(key);
    if (f != tb.end())
      k += static_cast<double>(c) * f->second;
  }
  return k;
}

std::vector<double> edge_betweenness_bruteforce(const Molecule &mol) {
  const int n = mol.num_atoms();
  const auto adj = adjacency(mol);
  const auto d = bfs_distances(mol);
  std::vector<double> eb(mol.num_bonds(), 0.0);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (d[s][t] <= 0)
        continue;
      // Enumerate every shortest s-t path explicitly.
      std::vector<std::vector<int>> paths;
      std::vector<int> bonds;
      std::function<void(int)> walk = [&](int u) {
        if (u == t) {
          paths.push_back(bonds);
          return;
        }
        for (auto [v, b]: adj[u])
          if (d[s][v] == d[s][u] + 1 && d[v][t] == d[u][t] - 1) {
            bonds.push_back(b);
            walk(v);
            bonds.pop_back();
          }
      };
      walk(s);
      for (const auto &p: paths)
        for (int b: p)
          eb[b] += 1.0 / static_cast<double>(paths.size());
    }
  return eb;
}

QpSolution svm_dual_bruteforce(const MatrixD &K, const std::vector<int> &y,
                               double C) {
  const int n = static_cast<int>(y.size());
  if (n > 10)
    throw std::invalid_argument("svm_dual_bruteforce: n > 10");
  Eigen::MatrixXd Q(n, n);
  Eigen::VectorXd ys(n);
  for (int i = 0; i < n; ++i) {
    ys(i) = y[i] ? 1.0 : -1.0;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      Q(i, j) = ys(i) * ys(j) * K(i, j);

  auto objective = [&](const Eigen::VectorXd &a) {
    return a.sum() - 0.5 * a.dot(Q * a);
  };

  QpSolution best;
  best.objective = -std::numeric_limits<double>::infinity();
  long combos = 1;
  for (int i = 0; i < n; ++i)
    combos *= 3;
  // state per variable: 0 -> alpha=0, 1 -> alpha=C, 2 -> free
  for (long code = 0; code < combos; ++code) {
    std::vector<int> state(n), free_idx;
    long c = code;
    for (int i = 0; i < n; ++i) {
      state[i] = static_cast<int>(c % 3);
      c /= 3;
      if (state[i] == 2)
        free_idx.push_back(i);
    }
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
      if (state[i] == 1)
        a(i) = C;
    const int f = static_cast<int>(free_idx.size());
    if (f > 0) {
      // max 1'a - a'Qa/2 over the free block subject to y'a = 0:
      // [Q_FF y_F; y_F' 0] [a_F; nu] = [1 - Q_FB a_B; -y_B' a_B]
      Eigen::MatrixXd A = Eigen::MatrixXd::Zero(f + 1, f + 1);
      Eigen::VectorXd rhs(f + 1);
      for (int r = 0; r < f; ++r) {
        const int i = free_idx[r];
        double s = 1.0;
        for (int j = 0; j < n; ++j)
          if (state[j] != 2)
            s -= Q(i, j) * a(j);
        rhs(r) = s;
        for (int q = 0; q < f; ++q)
          A(r, q) = Q(i, free_idx[q]);
        A(r, f) = ys(i);
        A(f, r) = ys(i);
      }
      double fixed = 0.0;
      for (int j = 0; j < n; ++j)
        if (state[j] != 2)
          fixed += ys(j) * a(j);
      rhs(f) = -fixed;
      Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
      if (!lu.isInvertible())
        continue;
      const Eigen::VectorXd sol = lu.solve(rhs);
      for (int r = 0; r < f; ++r)
        a(free_idx[r]) = sol(r);
    }
    if (std::abs(a.dot(ys)) > 1e-9)
      continue;
    bool feasible = true;
    for (int i = 0; i < n; ++i)
      if (a(i) < -1e-12 || a(i) > C + 1e-12)
        feasible = false;
    if (!feasible)
      continue;
    const double obj = objective(a);
    if (obj > best.objective) {
      best.objective = obj;
      best.alpha.assign(a.data(), a.data() + n);
    }
  }
  return best;
}

double mcc_direct(std::int64_t tp, std::int64_t fp, std::int64_t tn,
                  std::int64_t fn) {
  const long double num = static_cast<long double>(tp) * tn -
                          static_cast<long double>(fp) * fn;
  const long double den = std::sqrt(static_cast<long double>(tp + fp) *
                                    static_cast<long double>(tp + fn) *
                                    static_cast<long double>(tn + fp) *
                                    static_cast<long double>(tn + fn));
  if (den == 0)
    return 0.0;
  return static_cast<double>(num / den);
}

double auroc_pairs(const std::vector<double> &scores,
                   const std::vector<int> &labels) {
  double good = 0.0;
  long pairs = 0;
  for (std::size_t i = 0; i < scores.size(); ++i)
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (labels[i] != 1 || labels[j] != 0)
        continue;
      ++pairs;
      if (scores[i] > scores[j])
        good += 1.0;
      else if (scores[i] == scores[j])
        good += 0.5;
    }
  return good / static_cast<double>(pairs);
}

std::vector<std::size_t> maxmin_replay(
    const std::vector<std::vector<double>> &dist, std::size_t first,
    std::size_t k) {
  const std::size_t n = dist.size();
  std::vector<std::size_t> picked { first };
  std::vector<bool> in(n, false);
  in[first] = true;
  while (picked.size() < k) {
    std::size_t best = n;
    double best_d = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (in[i])
        continue;
      double m = std::numeric_limits<double>::infinity();
      for (std::size_t p: picked)
        m = std::min(m, dist[i][p]);
      if (m > best_d) {
        best_d = m;
        best = i;
      }
    }
    in[best] = true;
    picked.push_back(best);
  }
  return picked;
}

double set_tanimoto(const std::vector<std::uint64_t> &a,
                    const std::vector<std::uint64_t> &b) {
  const std::set<std::uint64_t> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::size_t both = 0;
  for (auto x: sa)
    both += sb.count(x);
  const std::size_t uni = sa.size() + sb.size() - both;
  return uni == 0 ? 1.0 : static_cast<double>(both) / uni;
}

}  // namespace pestgraph::oracle
