//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/molset.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "pestgraph/csv.h"
#include "pestgraph/smiles.h"

namespace pestgraph {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::optional<std::size_t> find_column(const std::vector<std::string> &header,
                                       std::initializer_list<const char *> names) {
  for (const char *n: names)
    for (std::size_t i = 0; i < header.size(); ++i)
      if (lower(header[i]) == n)
        return i;
  return std::nullopt;
}

std::optional<int> parse_int(const std::string &s) {
  int v = 0;
  const char *b = s.data(), *e = s.data() + s.size();
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e)
    return std::nullopt;
  return v;
}

std::optional<int> parse_label(const std::string &s) {
  const std::string l = lower(s);
  if (l == "1" || l == "true" || l == "toxic" || l == "1.0")
    return 1;
  if (l == "0" || l == "false" || l == "non-toxic" || l == "nontoxic" ||
      l == "0.0")
    return 0;
  return std::nullopt;
}

void add_record(MoleculeSet &set, std::size_t line, std::string id,
                const std::string &smiles, int label, std::optional<int> year) {
  if (id.empty())
    id = "row" + std::to_string(line);
  try {
    Molecule mol = parse_smiles(smiles);
    set.records.push_back(
        { std::move(id), smiles, std::move(mol), label, year });
  } catch (const std::exception &e) {
    set.rejected.push_back({ line, std::move(id), e.what() });
  }
}

}  // namespace

std::vector<Molecule> MoleculeSet::molecules() const {
  std::vector<Molecule> out;
  out.reserve(records.size());
  for (const auto &r: records)
    out.push_back(r.mol);
  return out;
}

std::vector<int> MoleculeSet::labels() const {
  std::vector<int> out;
  for (const auto &r: records)
    out.push_back(r.label);
  return out;
}

std::vector<std::string> MoleculeSet::ids() const {
  std::vector<std::string> out;
  for (const auto &r: records)
    out.push_back(r.id);
  return out;
}

bool MoleculeSet::has_labels() const {
  return !records.empty() &&
         std::all_of(records.begin(), records.end(),
                     [](const MoleculeRecord &r) { return r.label >= 0; });
}

MoleculeSet load_molecule_set(const std::filesystem::path &path) {
  MoleculeSet set;
  set.name = path.stem().string();
  const std::string ext = lower(path.extension().string());

  if (ext == ".smi" || ext == ".smiles" || ext == ".txt") {
    std::istringstream in(read_text_file(path));
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      std::istringstream ls(line);
      std::string smiles, id;
      if (!(ls >> smiles) || smiles[0] == '#')
        continue;
      ls >> id;
      add_record(set, n, id, smiles, -1, std::nullopt);
    }
    return set;
  }

  const CsvTable t = read_csv(path);
  const auto smiles_col =
      find_column(t.header, { "smiles", "canonical_smiles", "isomeric_smiles" });
  if (!smiles_col)
    throw std::runtime_error(path.string() + ": no SMILES column in header");
  const auto label_col = find_column(t.header, { "label", "y", "toxic" });
  const auto year_col = find_column(t.header, { "year", "publication_year" });
  const auto id_col = find_column(t.header, { "id", "cas", "name", "cid" });

  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto &row = t.rows[r];
    const std::size_t line = t.line_numbers[r];
    std::string id = id_col ? row[*id_col] : "";
    int label = -1;
    if (label_col) {
      auto l = parse_label(row[*label_col]);
      if (!l) {
        set.rejected.push_back(
            { line, id, "unrecognized label '" + row[*label_col] + "'" });
        continue;
      }
      label = *l;
    }
    std::optional<int> year;
    if (year_col && !row[*year_col].empty()) {
      year = parse_int(row[*year_col]);
      if (!year) {
        set.rejected.push_back(
            { line, id, "unrecognized year '" + row[*year_col] + "'" });
        continue;
      }
    }
    add_record(set, line, std::move(id), row[*smiles_col], label, year);
  }
  return set;
}

}  // namespace pestgraph
