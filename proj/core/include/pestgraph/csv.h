//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_CSV_H_
#define PESTGRAPH_CSV_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pestgraph {

class CsvError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// RFC 4180-style table: first row is the header. Quoted fields may contain
// commas, doubled quotes and newlines. Line numbers in errors are 1-based.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // source line of each row

  std::optional<std::size_t> column(std::string_view name) const;
  std::size_t require_column(std::string_view name) const;
  // First of `names` present in the header.
  std::optional<std::size_t> column_any(
      std::initializer_list<std::string_view> names) const;
};

CsvTable parse_csv(std::string_view text, const std::string &source = "<csv>");
CsvTable read_csv(const std::filesystem::path &path);

// Quotes a field if it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);
std::string csv_join(const std::vector<std::string> &fields);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace pestgraph

#endif  // PESTGRAPH_CSV_H_
