//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_CURATION_H_
#define PESTGRAPH_CURATION_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pestgraph/resolver.h"

namespace pestgraph {

enum class DoseUnit {
  kUgPerOrganism,
  kUgPerBee,
  kMgPerBee,
  kNgPerBee,
  kMgPerOrganism,
  kNgPerOrganism,
};

// Accepts "ug", "µg" or "μg" spellings, case-insensitive, e.g. "ug/bee".
std::optional<DoseUnit> parse_dose_unit(std::string_view text);
std::string dose_unit_name(DoseUnit unit);

// Dose in µg/organism; per-bee is per-organism. mg is x1000 and ng is /1000,
// both correctly rounded. Throws std::invalid_argument unless value > 0.
double standardize_unit(double value, DoseUnit unit);

enum class ExposureType { kOral, kContact, kOther };

// "oral" and "contact"/"topical" map to their groups; any other non-empty
// route is kOther. Empty input returns nullopt.
std::optional<ExposureType> parse_exposure_type(std::string_view text);
std::string exposure_type_name(ExposureType type);

struct ToxicityRecord {
  std::string cas;
  double dose_value = 0.0;
  DoseUnit dose_unit = DoseUnit::kUgPerOrganism;
  ExposureType exposure = ExposureType::kOther;
  std::string species;
  std::string source;
  std::optional<int> year;
};

struct Measurement {
  ExposureType exposure = ExposureType::kOther;
  double ug_per_organism = 0.0;
};

struct LD50Aggregate {
  std::optional<double> oral;
  std::optional<double> contact;
  std::optional<double> other;
  double overall = 0.0;  // min over present group medians
};

// Median (mean of the middle two for even counts).
double median(std::vector<double> values);

// Throws std::invalid_argument for an empty list.
LD50Aggregate aggregate_ld50(std::span<const Measurement> measurements);

// Strict: toxic iff ld50 < threshold.
bool label_toxicity(double ld50, double threshold = 11.0);

enum class MergePolicy {
  kMinimum,       // keep the lowest LD50 (strongest toxicity)
  kPreferManual,  // a manual value replaces measurement-derived ones
};

MergePolicy parse_merge_policy(const std::string &name);

enum class FragmentPolicy { kKeep, kLargest };

struct CuratedRecord {
  std::string id;
  std::string canonical_smiles;
  std::string cas;
  double ld50_ug = 0.0;
  int label = 0;
  std::string pesticide_type;  // empty when unknown
  std::optional<int> year;
  std::vector<std::string> provenance;  // sorted, unique
};

// Draft before structure merging: one per CAS from measurements or one per
// manual-source row.
struct CuratedDraft {
  std::string canonical_smiles;
  std::string cas;
  double ld50_ug = 0.0;
  std::string pesticide_type;
  std::optional<int> year;
  std::vector<std::string> provenance;
  bool manual = false;
  std::size_t input_records = 1;  // raw records folded into this draft
};

struct MergeReport {
  std::vector<std::string> conflicts;  // non-fatal metadata disagreements
};

// Groups drafts by canonical SMILES (dedup). LD50 follows `policy`;
// provenance is the union; pesticide_type and year come from manual drafts
// first (in input order), then from the rest. Labels use `threshold`. Output
// is sorted by canonical SMILES with ids assigned in that order.
std::vector<CuratedRecord> merge_drafts(std::span<const CuratedDraft> drafts,
                                        MergePolicy policy, double threshold,
                                        MergeReport *report = nullptr);

struct CurationConfig {
  std::vector<std::filesystem::path> measurement_files;
  std::vector<std::filesystem::path> manual_files;
  double threshold = 11.0;
  std::string species;  // empty: accept every species tag
  MergePolicy policy = MergePolicy::kMinimum;
  FragmentPolicy fragments = FragmentPolicy::kKeep;
  std::filesystem::path output_dir;
};

// Loads a JSON config; relative paths resolve against the config's folder.
// Resolver settings live under "resolver".
CurationConfig load_curation_config(const std::filesystem::path &path,
                                    ResolverConfig *resolver);

struct QuarantineEntry {
  std::string file;
  std::size_t line = 0;
  std::string cas;
  std::string stage;
  std::string reason;
};

struct CurationStats {
  std::size_t input_records = 0;
  std::size_t contributing_records = 0;
  std::size_t quarantined_records = 0;
  std::size_t output_molecules = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::map<std::string, std::size_t> per_source;  // contributing records
  std::vector<std::string> conflicts;
};

struct CurationResult {
  std::vector<CuratedRecord> records;
  std::vector<QuarantineEntry> quarantine;
  CurationStats stats;
};

class CurationError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// standardize -> aggregate -> resolve -> merge -> dedup -> label. Every input
// row either contributes to an output record or is quarantined with a
// reason. Unreadable inputs throw CurationError. Manual files may also use
// the dataset schema (canonical_smiles, provenance), so the pipeline's own
// output can be fed back in.
CurationResult run_curation(const CurationConfig &config,
                            CasResolver &resolver);

// Writes dataset.csv, quarantine.csv and stats.json into config.output_dir.
void write_curation_outputs(const CurationResult &result,
                            const CurationConfig &config);

std::string curated_dataset_csv(std::span<const CuratedRecord> records);
std::string quarantine_csv(std::span<const QuarantineEntry> entries);
std::string curation_stats_json(const CurationStats &stats, double threshold);

}  // namespace pestgraph

#endif  // PESTGRAPH_CURATION_H_
