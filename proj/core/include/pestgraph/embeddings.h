//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_EMBEDDINGS_H_
#define PESTGRAPH_EMBEDDINGS_H_

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pestgraph/tabular.h"

namespace pestgraph {

class EmbeddingError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EmbeddingJoin {
  TabularDataset data;               // rows in dataset order
  std::vector<std::string> missing;  // dataset ids without an embedding
};

// Joins an `id,e0,e1,...` CSV onto (ids, labels). Rows whose width differs
// from the header, non-numeric values, duplicate ids and ids not present in
// the dataset raise EmbeddingError naming the offending line.
EmbeddingJoin join_embeddings(std::string_view csv_text,
                              std::span<const std::string> ids,
                              std::span<const int> labels,
                              const std::string &source = "<embeddings>");

EmbeddingJoin load_embeddings(const std::filesystem::path &path,
                              std::span<const std::string> ids,
                              std::span<const int> labels);

}  // namespace pestgraph

#endif  // PESTGRAPH_EMBEDDINGS_H_
