//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_CAS_H_
#define PESTGRAPH_CAS_H_

#include <string>
#include <string_view>

namespace pestgraph {

// NNNNNNN-NN-N with 2..7 leading digits and a valid check digit: the sum of
// the other digits weighted 1, 2, 3, ... from the right, modulo 10.
bool is_valid_cas(std::string_view cas);

// Strips surrounding whitespace; does not validate.
std::string normalize_cas(std::string_view cas);

}  // namespace pestgraph

#endif  // PESTGRAPH_CAS_H_
