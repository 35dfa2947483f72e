//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_ELEMENTS_H_
#define PESTGRAPH_ELEMENTS_H_

#include <span>
#include <string_view>

namespace pestgraph {

inline constexpr int kMaxAtomicNumber = 118;

// Returns 0 for an unknown symbol. Case-sensitive ("Cl", not "CL").
int atomic_number(std::string_view symbol);

// Symbol for atomic number 1..118; empty view otherwise.
std::string_view element_symbol(int atomic_number);

// Organic subset atoms may be written without brackets.
bool is_organic_subset(int atomic_number);

// Ascending list of allowed valences for organic-subset atoms; empty for
// everything else.
std::span<const int> default_valences(int atomic_number);

// Elements that may be written in lowercase (aromatic) form.
bool may_be_aromatic(int atomic_number);

}  // namespace pestgraph

#endif  // PESTGRAPH_ELEMENTS_H_
