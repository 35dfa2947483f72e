//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/csv.h"

#include <fstream>
#include <sstream>

namespace pestgraph {

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name)
      return i;
  return std::nullopt;
}

std::size_t CsvTable::require_column(std::string_view name) const {
  auto c = column(name);
  if (!c)
    throw CsvError("missing required column '" + std::string(name) + "'");
  return *c;
}

std::optional<std::size_t> CsvTable::column_any(
    std::initializer_list<std::string_view> names) const {
  for (auto n: names)
    if (auto c = column(n))
      return c;
  return std::nullopt;
}

CsvTable parse_csv(std::string_view text, const std::string &source) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::size_t> lines;

  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_field = [&]() {
    fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&]() {
    end_field();
    // Skip blank lines.
    if (!(fields.size() == 1 && fields[0].empty())) {
      records.push_back(std::move(fields));
      lines.push_back(record_line);
    }
    fields.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n')
          ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_record();
      ++line;
      record_line = line;
    } else if (c == '\r') {
      // tolerate CRLF
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted)
    throw CsvError(source + ":" + std::to_string(record_line) +
                   ": unterminated quoted field");
  if (field_started || !fields.empty())
    end_record();

  CsvTable table;
  if (records.empty())
    throw CsvError(source + ": empty CSV (no header)");
  table.header = std::move(records[0]);
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size())
      throw CsvError(source + ":" + std::to_string(lines[r]) + ": expected " +
                     std::to_string(table.header.size()) + " fields, got " +
                     std::to_string(records[r].size()));
    table.rows.push_back(std::move(records[r]));
    table.line_numbers.push_back(lines[r]);
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path &path) {
  return parse_csv(read_text_file(path), path.string());
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos)
    return std::string(field);
  std::string out = "\"";
  for (char c: field) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_join(const std::vector<std::string> &fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i)
      out += ',';
    out += csv_escape(fields[i]);
  }
  return out;
}

std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out)
    throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace pestgraph
