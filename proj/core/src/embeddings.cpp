//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/embeddings.h"

#include <charconv>
#include <cmath>
#include <unordered_map>

#include "pestgraph/csv.h"

namespace pestgraph {
namespace {

// Tokenizes by hand instead of parse_csv so a short row produces a
// dimension error rather than a generic field-count error.
std::vector<std::vector<std::string>> split_lines(std::string_view text,
                                                  std::vector<std::size_t> &line_no) {
  std::vector<std::vector<std::string>> rows;
  std::size_t line = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++line;
    std::string_view ln = text.substr(start, end - start);
    if (!ln.empty() && ln.back() == '\r')
      ln.remove_suffix(1);
    if (!ln.empty()) {
      std::vector<std::string> fields;
      std::size_t p = 0;
      while (true) {
        const std::size_t c = ln.find(',', p);
        fields.emplace_back(ln.substr(p, c == std::string_view::npos ? ln.npos : c - p));
        if (c == std::string_view::npos)
          break;
        p = c + 1;
      }
      rows.push_back(std::move(fields));
      line_no.push_back(line);
    }
    if (end == text.size())
      break;
    start = end + 1;
  }
  return rows;
}

}  // namespace

EmbeddingJoin join_embeddings(std::string_view csv_text,
                              std::span<const std::string> ids,
                              std::span<const int> labels,
                              const std::string &source) {
  if (ids.size() != labels.size())
    throw std::invalid_argument("ids and labels differ in length");
  std::vector<std::size_t> line_no;
  const auto rows = split_lines(csv_text, line_no);
  if (rows.empty() || rows[0].empty() || rows[0][0] != "id")
    throw EmbeddingError(source + ": header must start with 'id'");
  const std::size_t d = rows[0].size() - 1;
  if (d == 0)
    throw EmbeddingError(source + ": no embedding columns");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i)
    index.emplace(ids[i], i);

  std::vector<std::vector<double>> found(ids.size());
  std::vector<bool> have(ids.size(), false);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string where = source + ":" + std::to_string(line_no[r]);
    if (rows[r].size() != d + 1)
      throw EmbeddingError(where + ": row '" + rows[r][0] + "' has " +
                           std::to_string(rows[r].size() - 1) +
                           " values, expected " + std::to_string(d));
    const auto it = index.find(rows[r][0]);
    if (it == index.end())
      throw EmbeddingError(where + ": unknown id '" + rows[r][0] + "'");
    if (have[it->second])
      throw EmbeddingError(where + ": duplicate id '" + rows[r][0] + "'");
    std::vector<double> v(d);
    for (std::size_t k = 0; k < d; ++k) {
      const std::string &f = rows[r][k + 1];
      auto res = std::from_chars(f.data(), f.data() + f.size(), v[k]);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size() ||
          !std::isfinite(v[k]))
        throw EmbeddingError(where + ": bad value '" + f + "' in column e" +
                             std::to_string(k));
    }
    found[it->second] = std::move(v);
    have[it->second] = true;
  }

  EmbeddingJoin out;
  std::vector<std::vector<double>> kept;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!have[i]) {
      out.missing.push_back(ids[i]);
      continue;
    }
    kept.push_back(std::move(found[i]));
    out.data.y.push_back(labels[i]);
    out.data.ids.push_back(ids[i]);
  }
  out.data.X = stack_rows(kept);
  if (kept.empty())
    out.data.X = MatrixD(0, d);
  return out;
}

EmbeddingJoin load_embeddings(const std::filesystem::path &path,
                              std::span<const std::string> ids,
                              std::span<const int> labels) {
  return join_embeddings(read_text_file(path), ids, labels, path.string());
}

}  // namespace pestgraph
