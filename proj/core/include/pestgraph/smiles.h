//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_SMILES_H_
#define PESTGRAPH_SMILES_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pestgraph/molecule.h"

namespace pestgraph {

enum class SmilesErrorKind {
  kEmpty,
  kSyntax,
  kUnknownElement,
  kUnmatchedRingClosure,
  kUnclosedBranch,
  kInvalidGraph,  // self-loop or duplicate bond
};

class SmilesError: public std::runtime_error {
public:
  SmilesError(SmilesErrorKind kind, std::size_t position,
              const std::string &message);

  SmilesErrorKind kind() const { return kind_; }
  // Zero-based byte offset into the input where the error was detected.
  std::size_t position() const { return position_; }

private:
  SmilesErrorKind kind_;
  std::size_t position_;
};

// Parses the OpenSMILES subset used throughout the library: organic-subset
// and bracket atoms, bond symbols - = # : (and / \ read as single), branches,
// ring closures (digits and %nn), and '.'-separated components. Stereo marks
// are accepted and dropped. Aromaticity is taken as written.
//
// Throws SmilesError on malformed input.
Molecule parse_smiles(std::string_view text);

// Number of parse_smiles() calls that dropped stereo information since
// process start.
std::size_t stereo_discard_count();

}  // namespace pestgraph

#endif  // PESTGRAPH_SMILES_H_
