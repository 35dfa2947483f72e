//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_TESTS_TEST_UTIL_H_
#define PESTGRAPH_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "pestgraph/molecule.h"
#include "pestgraph/rng.h"

namespace pestgraph::testing {

std::filesystem::path data_path(const std::string &name);

struct CorpusEntry {
  std::string smiles;
  std::string name;
};

// tests/data/corpus.smi
std::vector<CorpusEntry> load_corpus();

// Random heavy-atom graphs over C/N/O with single bonds and implicit H.
// `extra_bonds` ring closures are added on top of a random spanning tree.
Molecule random_molecule(SplitMix64 &rng, int atoms, int extra_bonds = 0);

// Uniform random permutation applied through permute_atoms.
Molecule shuffled(const Molecule &mol, SplitMix64 &rng);

// Scratch directory removed on destruction.
class TempDir {
public:
  explicit TempDir(const std::string &tag);
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;
  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const {
    return path_ / name;
  }

private:
  std::filesystem::path path_;
};

}  // namespace pestgraph::testing

#endif  // PESTGRAPH_TESTS_TEST_UTIL_H_
