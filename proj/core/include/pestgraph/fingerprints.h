//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_FINGERPRINTS_H_
#define PESTGRAPH_FINGERPRINTS_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pestgraph/matrix.h"
#include "pestgraph/molecule.h"

namespace pestgraph {

// Hashed feature multiset. When n_bits == 0 the ids are raw 64-bit hashes
// ("sparse"); otherwise they have been folded into [0, n_bits) and the vector
// is the sparse encoding of a dense count vector of length n_bits.
struct FingerprintVector {
  std::string scheme;  // algorithm + parameters, including n_bits
  std::uint32_t n_bits = 0;
  // Sorted by id, counts strictly positive.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> features;

  std::size_t num_features() const { return features.size(); }
  bool is_folded() const { return n_bits > 0; }

  // Dense count vector; requires is_folded().
  std::vector<std::uint32_t> dense() const;

  friend bool operator==(const FingerprintVector &,
                         const FingerprintVector &) = default;
};

class SchemeMismatch: public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// n_bits is 0 (unfolded) or a power of two in [64, 2^20].
void validate_n_bits(std::uint32_t n_bits);

// Morgan/ECFP. radius 2 is ECFP4. Unfolded when n_bits == 0.
FingerprintVector ecfp(const Molecule &mol, int radius, std::uint32_t n_bits,
                       bool counted);

// Atom pairs over every intra-component pair; cross-component pairs are
// skipped.
FingerprintVector atom_pairs(const Molecule &mol, std::uint32_t n_bits);

// One feature per simple 4-atom path a-b-c-d.
FingerprintVector topological_torsion(const Molecule &mol,
                                      std::uint32_t n_bits);

// Linear bond paths with min_len..max_len bonds, 1 <= min <= max <= 7.
FingerprintVector path_fingerprint(const Molecule &mol, int min_len,
                                   int max_len, std::uint32_t n_bits);

// Elements with their own slot in atom_count_vector(); anything else lands in
// the "other" slot.
const std::vector<std::string> &default_count_vocabulary();

// Slot names for atom_count_vector() with the given vocabulary:
// vocabulary..., "other", "heavy_atoms", "bonds".
std::vector<std::string> atom_count_schema(
    const std::vector<std::string> &vocabulary = default_count_vocabulary());

FingerprintVector atom_count_vector(
    const Molecule &mol,
    const std::vector<std::string> &vocabulary = default_count_vocabulary());

// Folds an unfolded fingerprint (ids modulo n_bits, counts summed).
FingerprintVector fold(const FingerprintVector &fp, std::uint32_t n_bits);

// Binary Tanimoto on feature presence. Both empty -> 1.0.
double tanimoto(const FingerprintVector &a, const FingerprintVector &b);

// Count generalization sum(min)/sum(max). Both empty -> 1.0.
double tanimoto_counts(const FingerprintVector &a, const FingerprintVector &b);

// Entry (i, j) = tanimoto(a[i], b[j]) (or tanimoto_counts when `counts`).
// Folded inputs use packed bitsets; results are bit-identical to the scalar
// calls for any thread count.
MatrixD bulk_tanimoto_matrix(std::span<const FingerprintVector> a,
                             std::span<const FingerprintVector> b,
                             int threads = 1, bool counts = false);

// Serialization. CSV record: id,scheme,n_bits,features where features is
// "id:count;..." (sparse) or a hex bitstring (dense, bit i is nibble i/4,
// most significant bit first).
std::string fingerprint_csv_header();
std::string fingerprint_to_csv(const FingerprintVector &fp,
                               const std::string &id, bool dense_hex);
std::string fingerprint_to_json(const FingerprintVector &fp,
                                const std::string &id, bool dense_hex);
std::string dense_hex(const FingerprintVector &fp);

}  // namespace pestgraph

#endif  // PESTGRAPH_FINGERPRINTS_H_
