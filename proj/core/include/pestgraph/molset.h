//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_MOLSET_H_
#define PESTGRAPH_MOLSET_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pestgraph/molecule.h"

namespace pestgraph {

struct MoleculeRecord {
  std::string id;
  std::string smiles;
  Molecule mol;
  int label = -1;  // -1 when the source has no label column
  std::optional<int> year;
};

struct RejectedRow {
  std::size_t line = 0;
  std::string id;
  std::string reason;
};

struct MoleculeSet {
  std::string name;
  std::vector<MoleculeRecord> records;
  std::vector<RejectedRow> rejected;

  std::size_t size() const { return records.size(); }
  std::vector<Molecule> molecules() const;
  std::vector<int> labels() const;
  std::vector<std::string> ids() const;
  bool has_labels() const;
};

// Loads a CSV (header detected case-insensitively: smiles/canonical_smiles,
// label/y/toxic, year, id/cas/name) or a whitespace-separated .smi file
// ("SMILES [id]"). Rows that fail to parse go to `rejected`. Missing ids are
// replaced by "row<N>". Throws std::runtime_error if no SMILES column exists.
MoleculeSet load_molecule_set(const std::filesystem::path &path);

}  // namespace pestgraph

#endif  // PESTGRAPH_MOLSET_H_
