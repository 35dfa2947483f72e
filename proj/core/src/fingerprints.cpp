//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/fingerprints.h"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pestgraph/elements.h"
#include "pestgraph/graph.h"
#include "pestgraph/hash.h"
#include "pestgraph/parallel.h"

namespace pestgraph {
namespace {

constexpr std::uint32_t kMinBits = 64;
constexpr std::uint32_t kMaxBits = 1U << 20;

// Pack (element, heavy degree, aromatic) into one order-preserving integer.
std::int64_t atom_code(const Molecule &mol, int i) {
  const Atom &a = mol.atom(i);
  return (static_cast<std::int64_t>(a.element) << 16) |
         (static_cast<std::int64_t>(mol.heavy_degree(i)) << 8) |
         (a.aromatic ? 1 : 0);
}

FingerprintVector finish(std::string scheme, std::uint32_t n_bits,
                         const std::map<std::uint64_t, std::uint32_t> &counts) {
  FingerprintVector fp;
  fp.scheme = std::move(scheme);
  fp.n_bits = 0;
  fp.features.assign(counts.begin(), counts.end());
  if (n_bits != 0)
    return fold(fp, n_bits);
  return fp;
}

std::string with_bits(const std::string &base, std::uint32_t n_bits) {
  return base + ":bits=" + std::to_string(n_bits);
}

}  // namespace

std::vector<std::uint32_t> FingerprintVector::dense() const {
  if (!is_folded())
    throw std::logic_error("dense() requires a folded fingerprint");
  std::vector<std::uint32_t> out(n_bits, 0);
  for (auto [id, c]: features)
    out[id] = c;
  return out;
}

void validate_n_bits(std::uint32_t n_bits) {
  if (n_bits == 0)
    return;
  if (n_bits < kMinBits || n_bits > kMaxBits || !std::has_single_bit(n_bits))
    throw std::invalid_argument("n_bits must be a power of two in [64, 2^20], got " +
                                std::to_string(n_bits));
}

FingerprintVector fold(const FingerprintVector &fp, std::uint32_t n_bits) {
  validate_n_bits(n_bits);
  if (fp.is_folded())
    throw std::invalid_argument("fingerprint is already folded");
  std::map<std::uint64_t, std::uint32_t> folded;
  for (auto [id, c]: fp.features)
    folded[id % n_bits] += c;
  FingerprintVector out;
  // The unfolded scheme carries ":bits=0"; replace it.
  auto pos = fp.scheme.rfind(":bits=");
  out.scheme = with_bits(fp.scheme.substr(0, pos), n_bits);
  out.n_bits = n_bits;
  out.features.assign(folded.begin(), folded.end());
  return out;
}

FingerprintVector ecfp(const Molecule &mol, int radius, std::uint32_t n_bits,
                       bool counted) {
  if (radius < 0)
    throw std::invalid_argument("ECFP radius must be non-negative");
  validate_n_bits(n_bits);

  const int n = mol.num_atoms();
  const RingFlags rings = ring_flags(mol);

  std::vector<std::uint64_t> ids(n);
  for (int i = 0; i < n; ++i) {
    const Atom &a = mol.atom(i);
    ids[i] = fnv1a({ a.element, mol.degree(i), a.formal_charge, a.hydrogens,
                     rings.atoms[i] ? 1 : 0, a.aromatic ? 1 : 0 });
  }

  std::map<std::uint64_t, std::uint32_t> counts;
  for (auto id: ids)
    ++counts[id];

  std::vector<std::pair<int, std::uint64_t>> env;
  std::vector<std::uint64_t> next(n);
  for (int r = 1; r <= radius; ++r) {
    for (int i = 0; i < n; ++i) {
      env.clear();
      for (const Neighbor &nb: mol.neighbors(i))
        env.emplace_back(bond_code(mol.bond(nb.bond).order), ids[nb.atom]);
      std::sort(env.begin(), env.end());
      Fnv1a64 h;
      h.add(r).add_u64(ids[i]);
      for (auto [code, id]: env)
        h.add(code).add_u64(id);
      next[i] = h.value();
    }
    ids.swap(next);
    for (auto id: ids)
      ++counts[id];
  }

  if (!counted)
    for (auto &kv: counts)
      kv.second = 1;

  std::string scheme = "ecfp:r=" + std::to_string(radius) +
                       ":counts=" + (counted ? "1" : "0");
  return finish(with_bits(scheme, 0), n_bits, counts);
}

FingerprintVector atom_pairs(const Molecule &mol, std::uint32_t n_bits) {
  validate_n_bits(n_bits);
  const int n = mol.num_atoms();
  const auto dist = topological_distance_matrix(mol);
  std::vector<std::int64_t> codes(n);
  for (int i = 0; i < n; ++i)
    codes[i] = atom_code(mol, i);

  std::map<std::uint64_t, std::uint32_t> counts;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = dist(i, j);
      if (d == kUnreachable)
        continue;
      const auto [lo, hi] = std::minmax(codes[i], codes[j]);
      ++counts[fnv1a({ lo, d, hi })];
    }
  }
  return finish(with_bits("atompairs", 0), n_bits, counts);
}

FingerprintVector topological_torsion(const Molecule &mol,
                                      std::uint32_t n_bits) {
  validate_n_bits(n_bits);
  std::map<std::uint64_t, std::uint32_t> counts;
  // Each 4-path is enumerated exactly once from its central bond.
  for (const Bond &center: mol.bonds()) {
    const int b = center.begin, c = center.end;
    for (const Neighbor &na: mol.neighbors(b)) {
      if (na.atom == c)
        continue;
      for (const Neighbor &nd: mol.neighbors(c)) {
        if (nd.atom == b || nd.atom == na.atom)
          continue;
        std::array<std::int64_t, 4> fwd { atom_code(mol, na.atom),
                                          atom_code(mol, b), atom_code(mol, c),
                                          atom_code(mol, nd.atom) };
        std::array<std::int64_t, 4> rev { fwd[3], fwd[2], fwd[1], fwd[0] };
        const auto &key = std::min(fwd, rev);
        ++counts[fnv1a(key)];
      }
    }
  }
  return finish(with_bits("torsion", 0), n_bits, counts);
}

namespace {

class PathEnumerator {
public:
  PathEnumerator(const Molecule &mol, int min_len, int max_len,
                 std::map<std::uint64_t, std::uint32_t> &counts)
      : mol_(mol), min_len_(min_len), max_len_(max_len), counts_(counts),
        on_path_(mol.num_atoms(), false) { }

  void run() {
    for (int s = 0; s < mol_.num_atoms(); ++s) {
      atoms_.assign(1, s);
      on_path_[s] = true;
      extend();
      on_path_[s] = false;
    }
  }

private:
  std::int64_t atom_token(int i) const {
    const Atom &a = mol_.atom(i);
    return (static_cast<std::int64_t>(a.element) << 1) | (a.aromatic ? 1 : 0);
  }

  void record() {
    // Each undirected path appears twice; keep the copy with the lower start.
    if (atoms_.front() > atoms_.back())
      return;
    std::vector<std::int64_t> fwd;
    fwd.reserve(2 * atoms_.size() - 1);
    fwd.push_back(atom_token(atoms_[0]));
    for (std::size_t k = 0; k < bonds_.size(); ++k) {
      fwd.push_back(bond_code(mol_.bond(bonds_[k]).order));
      fwd.push_back(atom_token(atoms_[k + 1]));
    }
    std::vector<std::int64_t> rev(fwd.rbegin(), fwd.rend());
    const auto &key = std::min(fwd, rev);
    ++counts_[Fnv1a64().add(static_cast<std::int64_t>(bonds_.size()))
                  .add(std::span<const std::int64_t>(key))
                  .value()];
  }

  void extend() {
    const int len = static_cast<int>(bonds_.size());
    if (len >= min_len_)
      record();
    if (len == max_len_)
      return;
    for (const Neighbor &nb: mol_.neighbors(atoms_.back())) {
      if (on_path_[nb.atom])
        continue;
      on_path_[nb.atom] = true;
      atoms_.push_back(nb.atom);
      bonds_.push_back(nb.bond);
      extend();
      bonds_.pop_back();
      atoms_.pop_back();
      on_path_[nb.atom] = false;
    }
  }

  const Molecule &mol_;
  int min_len_, max_len_;
  std::map<std::uint64_t, std::uint32_t> &counts_;
  std::vector<bool> on_path_;
  std::vector<int> atoms_;
  std::vector<int> bonds_;
};

}  // namespace

FingerprintVector path_fingerprint(const Molecule &mol, int min_len,
                                   int max_len, std::uint32_t n_bits) {
  if (min_len < 1 || min_len > max_len || max_len > 7)
    throw std::invalid_argument("path lengths must satisfy 1 <= min <= max <= 7");
  validate_n_bits(n_bits);
  std::map<std::uint64_t, std::uint32_t> counts;
  PathEnumerator(mol, min_len, max_len, counts).run();
  const std::string scheme = "path:min=" + std::to_string(min_len) +
                             ":max=" + std::to_string(max_len);
  return finish(with_bits(scheme, 0), n_bits, counts);
}

const std::vector<std::string> &default_count_vocabulary() {
  static const std::vector<std::string> vocab = {
    "H",  "B", "C",  "N",  "O",  "F",  "Si", "P",  "S",
    "Cl", "Br", "I", "Na", "K",  "Cu", "Zn", "Sn", "Hg",
  };
  return vocab;
}

std::vector<std::string> atom_count_schema(
    const std::vector<std::string> &vocabulary) {
  std::vector<std::string> names = vocabulary;
  names.push_back("other");
  names.push_back("heavy_atoms");
  names.push_back("bonds");
  return names;
}

FingerprintVector atom_count_vector(const Molecule &mol,
                                    const std::vector<std::string> &vocabulary) {
  const std::size_t k = vocabulary.size();
  std::vector<int> slot_of(kMaxAtomicNumber + 1, static_cast<int>(k));
  for (std::size_t s = 0; s < k; ++s) {
    const int z = atomic_number(vocabulary[s]);
    if (z == 0)
      throw std::invalid_argument("unknown element in vocabulary: " +
                                  vocabulary[s]);
    slot_of[z] = static_cast<int>(s);
  }

  std::vector<std::uint32_t> values(k + 3, 0);
  for (const Atom &a: mol.atoms()) {
    ++values[slot_of[a.element]];
    if (a.element != 1)
      ++values[k + 1];
  }
  values[k + 2] = static_cast<std::uint32_t>(mol.num_bonds());

  FingerprintVector fp;
  fp.n_bits = static_cast<std::uint32_t>(values.size());
  fp.scheme = "atomcounts:v=" + std::to_string(k) + ":bits=" +
              std::to_string(fp.n_bits);
  for (std::size_t s = 0; s < values.size(); ++s)
    if (values[s] > 0)
      fp.features.emplace_back(s, values[s]);
  return fp;
}

namespace {

void check_scheme(const FingerprintVector &a, const FingerprintVector &b) {
  if (a.scheme != b.scheme || a.n_bits != b.n_bits)
    throw SchemeMismatch("fingerprint scheme mismatch: '" + a.scheme +
                         "' vs '" + b.scheme + "'");
}

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

double tanimoto(const FingerprintVector &a, const FingerprintVector &b) {
  check_scheme(a, b);
  std::uint64_t common = 0;
  auto i = a.features.begin(), j = b.features.begin();
  while (i != a.features.end() && j != b.features.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return ratio(common, a.features.size() + b.features.size() - common);
}

double tanimoto_counts(const FingerprintVector &a, const FingerprintVector &b) {
  check_scheme(a, b);
  std::uint64_t lo = 0, hi = 0;
  auto i = a.features.begin(), j = b.features.begin();
  while (i != a.features.end() || j != b.features.end()) {
    if (j == b.features.end() ||
        (i != a.features.end() && i->first < j->first)) {
      hi += i->second;
      ++i;
    } else if (i == a.features.end() || j->first < i->first) {
      hi += j->second;
      ++j;
    } else {
      lo += std::min(i->second, j->second);
      hi += std::max(i->second, j->second);
      ++i;
      ++j;
    }
  }
  return ratio(lo, hi);
}

MatrixD bulk_tanimoto_matrix(std::span<const FingerprintVector> a,
                             std::span<const FingerprintVector> b,
                             int threads, bool counts) {
  const FingerprintVector *ref = !a.empty() ? &a[0] : (!b.empty() ? &b[0] : nullptr);
  for (const auto &fp: a)
    check_scheme(*ref, fp);
  for (const auto &fp: b)
    check_scheme(*ref, fp);

  MatrixD out(a.size(), b.size(), 0.0);
  if (a.empty() || b.empty())
    return out;

  // Packed presence bits for the common folded case.
  const bool packed = !counts && ref->is_folded() && ref->n_bits <= 16384;
  if (!packed) {
    parallel_for(a.size(), threads, [&](std::size_t i) {
      for (std::size_t j = 0; j < b.size(); ++j)
        out(i, j) = counts ? tanimoto_counts(a[i], b[j]) : tanimoto(a[i], b[j]);
    });
    return out;
  }

  const std::size_t words = (ref->n_bits + 63) / 64;
  auto pack = [&](std::span<const FingerprintVector> fps) {
    std::vector<std::uint64_t> bits(fps.size() * words, 0);
    for (std::size_t k = 0; k < fps.size(); ++k)
      for (auto [id, c]: fps[k].features)
        bits[k * words + id / 64] |= std::uint64_t { 1 } << (id % 64);
    return bits;
  };
  const auto abits = pack(a);
  const auto bbits = pack(b);

  parallel_for(a.size(), threads, [&](std::size_t i) {
    const std::uint64_t *x = abits.data() + i * words;
    const std::uint64_t na = a[i].features.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::uint64_t *y = bbits.data() + j * words;
      std::uint64_t common = 0;
      for (std::size_t w = 0; w < words; ++w)
        common += std::popcount(x[w] & y[w]);
      out(i, j) = ratio(common, na + b[j].features.size() - common);
    }
  });
  return out;
}

std::string dense_hex(const FingerprintVector &fp) {
  if (!fp.is_folded())
    throw std::invalid_argument("hex encoding requires a folded fingerprint");
  static constexpr char kHex[] = "0123456789abcdef";
  std::vector<int> nibbles((fp.n_bits + 3) / 4, 0);
  for (auto [id, c]: fp.features)
    nibbles[id / 4] |= 8 >> (id % 4);
  std::string out;
  out.reserve(nibbles.size());
  for (int v: nibbles)
    out += kHex[v];
  return out;
}

std::string fingerprint_csv_header() { return "id,scheme,n_bits,features"; }

std::string fingerprint_to_csv(const FingerprintVector &fp,
                               const std::string &id, bool as_hex) {
  std::string out = id + "," + fp.scheme + "," + std::to_string(fp.n_bits) + ",";
  if (as_hex) {
    out += dense_hex(fp);
  } else {
    bool first = true;
    for (auto [fid, c]: fp.features) {
      if (!first)
        out += ';';
      first = false;
      out += std::to_string(fid) + ":" + std::to_string(c);
    }
  }
  return out;
}

std::string fingerprint_to_json(const FingerprintVector &fp,
                                const std::string &id, bool as_hex) {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["scheme"] = fp.scheme;
  j["n_bits"] = fp.n_bits;
  if (as_hex) {
    j["bits"] = dense_hex(fp);
  } else {
    auto arr = nlohmann::ordered_json::array();
    for (auto [fid, c]: fp.features)
      arr.push_back({ fid, c });
    j["features"] = std::move(arr);
  }
  return j.dump();
}

}  // namespace pestgraph
