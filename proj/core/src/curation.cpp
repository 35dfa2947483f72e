//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/curation.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

#include "json.hpp"
#include "pestgraph/canonical.h"
#include "pestgraph/cas.h"
#include "pestgraph/csv.h"
#include "pestgraph/format.h"
#include "pestgraph/graph.h"
#include "pestgraph/smiles.h"

namespace pestgraph {
namespace {

std::string lower_trim(std::string_view s) {
  std::string out;
  for (char c: s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) { return normalize_cas(s); }

std::optional<double> parse_positive(const std::string &text) {
  const std::string t = trim(text);
  double v = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() ||
      !std::isfinite(v) || v <= 0)
    return std::nullopt;
  return v;
}

// nullopt for empty; throws on garbage.
std::optional<int> parse_year(const std::string &text) {
  const std::string t = trim(text);
  if (t.empty())
    return std::nullopt;
  int v = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw std::invalid_argument("invalid year '" + t + "'");
  return v;
}

std::vector<std::string> split_sources(const std::string &text) {
  std::vector<std::string> out;
  std::size_t p = 0;
  while (p <= text.size()) {
    std::size_t q = text.find(';', p);
    if (q == std::string::npos)
      q = text.size();
    std::string tok = trim(std::string_view(text).substr(p, q - p));
    if (!tok.empty())
      out.push_back(std::move(tok));
    p = q + 1;
  }
  return out;
}

std::string canonicalize(const std::string &smiles, FragmentPolicy fragments) {
  Molecule mol = parse_smiles(smiles);
  if (fragments == FragmentPolicy::kLargest && mol.num_atoms() > 0) {
    auto parts = connected_components(mol);
    if (parts.size() > 1)
      return canonical_smiles(parts.front());
  }
  return canonical_smiles(mol);
}

const std::string *cell(const CsvTable &t, std::size_t row,
                        std::optional<std::size_t> col) {
  return col ? &t.rows[row][*col] : nullptr;
}

CsvTable read_input(const std::filesystem::path &path) {
  try {
    return read_csv(path);
  } catch (const std::exception &e) {
    throw CurationError("cannot read input '" + path.string() + "': " +
                        e.what());
  }
}

struct RawMeasurement {
  std::string file;
  std::size_t line = 0;
  Measurement m;
  std::string source;
  std::optional<int> year;
};

template <class T>
void insert_sorted_unique(std::vector<T> &v, const T &x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x)
    v.insert(it, x);
}

}  // namespace

std::optional<DoseUnit> parse_dose_unit(std::string_view text) {
  std::string t = lower_trim(text);
  // Normalize micro signs (U+00B5, U+03BC) to "u".
  for (const char *micro: { "\xc2\xb5", "\xce\xbc" }) {
    auto p = t.find(micro);
    if (p != std::string::npos)
      t.replace(p, 2, "u");
  }
  if (t == "ug/organism")
    return DoseUnit::kUgPerOrganism;
  if (t == "ug/bee")
    return DoseUnit::kUgPerBee;
  if (t == "mg/bee")
    return DoseUnit::kMgPerBee;
  if (t == "ng/bee")
    return DoseUnit::kNgPerBee;
  if (t == "mg/organism")
    return DoseUnit::kMgPerOrganism;
  if (t == "ng/organism")
    return DoseUnit::kNgPerOrganism;
  return std::nullopt;
}

std::string dose_unit_name(DoseUnit unit) {
  switch (unit) {
  case DoseUnit::kUgPerOrganism: return "ug/organism";
  case DoseUnit::kUgPerBee: return "ug/bee";
  case DoseUnit::kMgPerBee: return "mg/bee";
  case DoseUnit::kNgPerBee: return "ng/bee";
  case DoseUnit::kMgPerOrganism: return "mg/organism";
  case DoseUnit::kNgPerOrganism: return "ng/organism";
  }
  return "?";
}

double standardize_unit(double value, DoseUnit unit) {
  if (!(value > 0) || !std::isfinite(value))
    throw std::invalid_argument("dose must be positive and finite");
  switch (unit) {
  case DoseUnit::kUgPerOrganism:
  case DoseUnit::kUgPerBee: return value;
  case DoseUnit::kMgPerBee:
  case DoseUnit::kMgPerOrganism: return value * 1000.0;
  case DoseUnit::kNgPerBee:
  case DoseUnit::kNgPerOrganism: return value / 1000.0;
  }
  throw std::invalid_argument("unsupported unit");
}

std::optional<ExposureType> parse_exposure_type(std::string_view text) {
  const std::string t = lower_trim(text);
  if (t.empty())
    return std::nullopt;
  if (t == "oral")
    return ExposureType::kOral;
  if (t == "contact" || t == "topical")
    return ExposureType::kContact;
  return ExposureType::kOther;
}

std::string exposure_type_name(ExposureType type) {
  switch (type) {
  case ExposureType::kOral: return "oral";
  case ExposureType::kContact: return "contact";
  case ExposureType::kOther: return "other";
  }
  return "?";
}

double median(std::vector<double> values) {
  if (values.empty())
    throw std::invalid_argument("median of empty list");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1)
    return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

LD50Aggregate aggregate_ld50(std::span<const Measurement> measurements) {
  if (measurements.empty())
    throw std::invalid_argument("no measurements to aggregate");
  std::vector<double> groups[3];
  for (const auto &m: measurements)
    groups[static_cast<int>(m.exposure)].push_back(m.ug_per_organism);
  LD50Aggregate a;
  std::optional<double> *slots[3] = { &a.oral, &a.contact, &a.other };
  double overall = INFINITY;
  for (int g = 0; g < 3; ++g) {
    if (groups[g].empty())
      continue;
    *slots[g] = median(groups[g]);
    overall = std::min(overall, **slots[g]);
  }
  a.overall = overall;
  return a;
}

bool label_toxicity(double ld50, double threshold) {
  if (!(ld50 > 0))
    throw std::invalid_argument("LD50 must be positive");
  return ld50 < threshold;
}

MergePolicy parse_merge_policy(const std::string &name) {
  if (name == "min" || name == "minimum")
    return MergePolicy::kMinimum;
  if (name == "manual" || name == "prefer_manual")
    return MergePolicy::kPreferManual;
  throw std::invalid_argument("unknown merge policy '" + name + "'");
}

std::vector<CuratedRecord> merge_drafts(std::span<const CuratedDraft> drafts,
                                        MergePolicy policy, double threshold,
                                        MergeReport *report) {
  std::map<std::string, std::vector<const CuratedDraft *>> groups;
  for (const auto &d: drafts)
    groups[d.canonical_smiles].push_back(&d);

  auto note = [&](std::string msg) {
    if (report)
      report->conflicts.push_back(std::move(msg));
  };

  std::vector<CuratedRecord> out;
  for (auto &[canon, members]: groups) {
    // Manual drafts first, each side in input order.
    std::stable_partition(members.begin(), members.end(),
                          [](const CuratedDraft *d) { return d->manual; });
    const bool any_manual = members.front()->manual;

    CuratedRecord r;
    r.canonical_smiles = canon;
    double ld50 = INFINITY;
    for (const auto *d: members)
      if (policy == MergePolicy::kMinimum || !any_manual || d->manual)
        ld50 = std::min(ld50, d->ld50_ug);
    r.ld50_ug = ld50;

    std::set<std::string> cas_seen;
    for (const auto *d: members) {
      if (!d->cas.empty())
        cas_seen.insert(d->cas);
      if (r.cas.empty() && !d->cas.empty() && d->manual)
        r.cas = d->cas;
      if (!d->pesticide_type.empty()) {
        if (r.pesticide_type.empty())
          r.pesticide_type = d->pesticide_type;
        else if (r.pesticide_type != d->pesticide_type)
          note(canon + ": pesticide_type '" + d->pesticide_type +
               "' conflicts with '" + r.pesticide_type + "'");
      }
      if (d->year) {
        if (!r.year)
          r.year = d->year;
        else if (*r.year != *d->year)
          note(canon + ": year " + std::to_string(*d->year) +
               " conflicts with " + std::to_string(*r.year));
      }
      for (const auto &p: d->provenance)
        insert_sorted_unique(r.provenance, p);
    }
    if (r.cas.empty() && !cas_seen.empty())
      r.cas = *cas_seen.begin();
    if (cas_seen.size() > 1) {
      std::string list;
      for (const auto &c: cas_seen)
        list += (list.empty() ? "" : ", ") + c;
      note(canon + ": multiple CAS numbers (" + list + "), kept " + r.cas);
    }
    r.label = label_toxicity(r.ld50_ug, threshold) ? 1 : 0;
    out.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "PG%05zu", i + 1);
    out[i].id = buf;
  }
  return out;
}

CurationConfig load_curation_config(const std::filesystem::path &path,
                                    ResolverConfig *resolver) {
  if (!std::filesystem::exists(path))
    throw CurationError("config file '" + path.string() + "' not found");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const std::exception &e) {
    throw CurationError("cannot parse config '" + path.string() +
                        "': " + e.what());
  }
  const auto base = path.parent_path();
  auto resolve_path = [&](const std::string &p) {
    std::filesystem::path q(p);
    return q.is_absolute() ? q : base / q;
  };

  CurationConfig c;
  for (const auto &p: j.value("measurements", std::vector<std::string> {}))
    c.measurement_files.push_back(resolve_path(p));
  for (const auto &p: j.value("manual", std::vector<std::string> {}))
    c.manual_files.push_back(resolve_path(p));
  c.threshold = j.value("threshold", 11.0);
  c.species = j.value("species", std::string {});
  c.policy = parse_merge_policy(j.value("merge_policy", std::string("min")));
  const std::string frag = j.value("fragments", std::string("keep"));
  if (frag == "keep")
    c.fragments = FragmentPolicy::kKeep;
  else if (frag == "largest")
    c.fragments = FragmentPolicy::kLargest;
  else
    throw CurationError("unknown fragment policy '" + frag + "'");
  if (j.contains("output_dir"))
    c.output_dir = resolve_path(j.at("output_dir"));

  if (resolver) {
    resolver->offline = j.value("offline", resolver->offline);
    if (j.contains("resolver")) {
      const auto &r = j.at("resolver");
      resolver->base_url = r.value("base_url", resolver->base_url);
      if (r.contains("cache"))
        resolver->cache_path = resolve_path(r.at("cache"));
      if (r.contains("mapping"))
        resolver->mapping_path = resolve_path(r.at("mapping"));
      resolver->offline = r.value("offline", resolver->offline);
      resolver->max_retries = r.value("max_retries", resolver->max_retries);
      resolver->backoff = std::chrono::milliseconds(
          r.value("backoff_ms", static_cast<int>(resolver->backoff.count())));
      resolver->min_interval = std::chrono::milliseconds(r.value(
          "rate_limit_ms", static_cast<int>(resolver->min_interval.count())));
    }
  }
  return c;
}

CurationResult run_curation(const CurationConfig &config,
                            CasResolver &resolver) {
  CurationResult res;
  auto &stats = res.stats;
  auto quarantine = [&](const std::string &file, std::size_t line,
                        const std::string &cas, const char *stage,
                        std::string reason) {
    res.quarantine.push_back({ file, line, cas, stage, std::move(reason) });
  };

  // Stage 1: read and standardize measurements, grouped by CAS.
  std::map<std::string, std::vector<RawMeasurement>> by_cas;
  for (const auto &path: config.measurement_files) {
    const CsvTable t = read_input(path);
    const std::string file = path.filename().string();
    std::size_t c_cas, c_value, c_unit, c_exp;
    try {
      c_cas = t.require_column("cas");
      c_value = t.require_column("dose_value");
      c_unit = t.require_column("dose_unit");
      c_exp = t.require_column("exposure_type");
    } catch (const std::exception &e) {
      throw CurationError(path.string() + ": " + e.what());
    }
    const auto c_species = t.column("species");
    const auto c_source = t.column("source");
    const auto c_year = t.column("year");

    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      ++stats.input_records;
      const std::size_t line = t.line_numbers[r];
      const std::string cas = normalize_cas(t.rows[r][c_cas]);
      if (!is_valid_cas(cas)) {
        quarantine(file, line, cas, "validate", "invalid CAS number");
        continue;
      }
      const auto value = parse_positive(t.rows[r][c_value]);
      if (!value) {
        quarantine(file, line, cas, "validate",
                   "dose_value '" + t.rows[r][c_value] + "' is not positive");
        continue;
      }
      const auto unit = parse_dose_unit(t.rows[r][c_unit]);
      if (!unit) {
        quarantine(file, line, cas, "standardize",
                   "unsupported unit '" + t.rows[r][c_unit] + "'");
        continue;
      }
      const auto exposure = parse_exposure_type(t.rows[r][c_exp]);
      if (!exposure) {
        quarantine(file, line, cas, "validate", "missing exposure_type");
        continue;
      }
      if (const std::string *sp = cell(t, r, c_species);
          !config.species.empty() && sp && !trim(*sp).empty() &&
          trim(*sp) != config.species) {
        quarantine(file, line, cas, "validate",
                   "species '" + trim(*sp) + "' != '" + config.species + "'");
        continue;
      }
      std::optional<int> year;
      try {
        if (const std::string *y = cell(t, r, c_year))
          year = parse_year(*y);
      } catch (const std::exception &e) {
        quarantine(file, line, cas, "validate", e.what());
        continue;
      }
      std::string source =
          c_source ? trim(t.rows[r][*c_source]) : std::string {};
      if (source.empty())
        source = path.stem().string();
      by_cas[cas].push_back(
          { file, line,
            { *exposure, standardize_unit(*value, *unit) },
            std::move(source), year });
    }
  }

  // Stage 2-3: aggregate per CAS and resolve structures.
  std::vector<CuratedDraft> drafts;
  std::vector<std::vector<std::string>> draft_sources;  // per raw record
  for (const auto &[cas, raws]: by_cas) {
    auto reject_all = [&](const char *stage, const std::string &reason) {
      for (const auto &raw: raws)
        quarantine(raw.file, raw.line, cas, stage, reason);
    };
    const ResolveResult rr = resolver.resolve(cas);
    if (rr.status != ResolveStatus::kFound) {
      reject_all("resolve", (rr.status == ResolveStatus::kNotFound
                                 ? "not found: "
                                 : "network failure: ") +
                                rr.detail);
      continue;
    }
    std::string canon;
    try {
      canon = canonicalize(rr.smiles, config.fragments);
    } catch (const std::exception &e) {
      reject_all("structure", std::string("unparseable SMILES: ") + e.what());
      continue;
    }
    std::vector<Measurement> ms;
    CuratedDraft d;
    d.canonical_smiles = canon;
    d.cas = cas;
    std::vector<std::string> sources;
    for (const auto &raw: raws) {
      ms.push_back(raw.m);
      insert_sorted_unique(d.provenance, raw.source);
      sources.push_back(raw.source);
      if (raw.year && (!d.year || *raw.year < *d.year))
        d.year = raw.year;
    }
    d.ld50_ug = aggregate_ld50(ms).overall;
    d.input_records = raws.size();
    drafts.push_back(std::move(d));
    draft_sources.push_back(std::move(sources));
  }

  // Manual sources: one record per compound per file.
  for (const auto &path: config.manual_files) {
    const CsvTable t = read_input(path);
    const std::string file = path.filename().string();
    const auto c_cas = t.column("cas");
    const auto c_smiles = t.column_any({ "smiles", "canonical_smiles" });
    const auto c_ld50 = t.column("ld50_ug");
    if (!c_ld50 || (!c_cas && !c_smiles))
      throw CurationError(path.string() +
                          ": manual source needs ld50_ug and cas or smiles");
    const auto c_type = t.column("pesticide_type");
    const auto c_year = t.column("year");
    const auto c_source = t.column_any({ "source", "provenance" });

    std::set<std::string> seen;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      ++stats.input_records;
      const std::size_t line = t.line_numbers[r];
      const std::string cas = c_cas ? normalize_cas(t.rows[r][*c_cas]) : "";
      if (!cas.empty() && !is_valid_cas(cas)) {
        quarantine(file, line, cas, "validate", "invalid CAS number");
        continue;
      }
      const auto ld50 = parse_positive(t.rows[r][*c_ld50]);
      if (!ld50) {
        quarantine(file, line, cas, "validate",
                   "ld50_ug '" + t.rows[r][*c_ld50] + "' is not positive");
        continue;
      }
      std::optional<int> year;
      try {
        if (const std::string *y = cell(t, r, c_year))
          year = parse_year(*y);
      } catch (const std::exception &e) {
        quarantine(file, line, cas, "validate", e.what());
        continue;
      }
      std::string smiles = c_smiles ? trim(t.rows[r][*c_smiles]) : "";
      if (smiles.empty()) {
        if (cas.empty()) {
          quarantine(file, line, cas, "validate", "neither CAS nor SMILES");
          continue;
        }
        const ResolveResult rr = resolver.resolve(cas);
        if (rr.status != ResolveStatus::kFound) {
          quarantine(file, line, cas, "resolve",
                     (rr.status == ResolveStatus::kNotFound
                          ? "not found: "
                          : "network failure: ") +
                         rr.detail);
          continue;
        }
        smiles = rr.smiles;
      }
      std::string canon;
      try {
        canon = canonicalize(smiles, config.fragments);
      } catch (const std::exception &e) {
        quarantine(file, line, cas, "structure",
                   std::string("unparseable SMILES: ") + e.what());
        continue;
      }
      if (!seen.insert(canon).second) {
        quarantine(file, line, cas, "merge",
                   "duplicate structure within manual source");
        continue;
      }
      CuratedDraft d;
      d.canonical_smiles = canon;
      d.cas = cas;
      d.ld50_ug = *ld50;
      d.pesticide_type = c_type ? trim(t.rows[r][*c_type]) : "";
      d.year = year;
      d.manual = true;
      std::vector<std::string> sources =
          c_source ? split_sources(t.rows[r][*c_source])
                   : std::vector<std::string> {};
      if (sources.empty())
        sources.push_back(path.stem().string());
      for (const auto &s: sources)
        insert_sorted_unique(d.provenance, s);
      drafts.push_back(std::move(d));
      draft_sources.push_back(std::move(sources));
    }
  }

  // Stage 4-6: merge, dedup, label.
  MergeReport report;
  res.records = merge_drafts(drafts, config.policy, config.threshold, &report);
  stats.conflicts = std::move(report.conflicts);
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    stats.contributing_records += drafts[i].input_records;
    for (const auto &s: draft_sources[i])
      ++stats.per_source[s];
  }
  stats.quarantined_records = res.quarantine.size();
  stats.output_molecules = res.records.size();
  for (const auto &r: res.records)
    (r.label ? stats.positives : stats.negatives) += 1;

  if (stats.contributing_records + stats.quarantined_records !=
      stats.input_records)
    throw std::logic_error("curation record accounting mismatch");
  return res;
}

std::string curated_dataset_csv(std::span<const CuratedRecord> records) {
  std::string out =
      "id,canonical_smiles,cas,ld50_ug,label,pesticide_type,year,provenance\n";
  for (const auto &r: records) {
    std::string prov;
    for (const auto &p: r.provenance)
      prov += (prov.empty() ? "" : ";") + p;
    out += csv_join({ r.id, r.canonical_smiles, r.cas, format_double(r.ld50_ug),
                      std::to_string(r.label), r.pesticide_type,
                      r.year ? std::to_string(*r.year) : "", prov });
    out += "\n";
  }
  return out;
}

std::string quarantine_csv(std::span<const QuarantineEntry> entries) {
  std::string out = "file,line,cas,stage,reason\n";
  for (const auto &q: entries)
    out += csv_join({ q.file, std::to_string(q.line), q.cas, q.stage,
                      q.reason }) +
           "\n";
  return out;
}

std::string curation_stats_json(const CurationStats &s, double threshold) {
  nlohmann::ordered_json j;
  j["threshold_ug"] = threshold;
  j["input_records"] = s.input_records;
  j["contributing_records"] = s.contributing_records;
  j["quarantined_records"] = s.quarantined_records;
  j["output_molecules"] = s.output_molecules;
  j["positives"] = s.positives;
  j["negatives"] = s.negatives;
  j["positive_fraction"] =
      s.output_molecules ? static_cast<double>(s.positives) /
                               static_cast<double>(s.output_molecules)
                         : 0.0;
  j["per_source"] = s.per_source;
  j["conflicts"] = s.conflicts;
  return j.dump(2) + "\n";
}

void write_curation_outputs(const CurationResult &result,
                            const CurationConfig &config) {
  const auto dir = config.output_dir.empty() ? std::filesystem::path(".")
                                             : config.output_dir;
  std::filesystem::create_directories(dir);
  write_text_file(dir / "dataset.csv", curated_dataset_csv(result.records));
  write_text_file(dir / "quarantine.csv", quarantine_csv(result.quarantine));
  write_text_file(dir / "stats.json",
                  curation_stats_json(result.stats, config.threshold));
}

}  // namespace pestgraph
