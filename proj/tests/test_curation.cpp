//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <set>

#include "pestgraph/canonical.h"
#include "pestgraph/cas.h"
#include "pestgraph/csv.h"
#include "pestgraph/curation.h"
#include "pestgraph/rng.h"
#include "pestgraph/smiles.h"
#include "test_util.h"

namespace pestgraph {
namespace {

namespace fs = std::filesystem;

TEST(Units, Standardize) {
  EXPECT_DOUBLE_EQ(standardize_unit(0.5, DoseUnit::kMgPerBee), 500.0);
  EXPECT_DOUBLE_EQ(standardize_unit(11, DoseUnit::kUgPerOrganism), 11.0);
  EXPECT_DOUBLE_EQ(standardize_unit(2500, DoseUnit::kNgPerBee), 2.5);
  EXPECT_EQ(standardize_unit(0.097, DoseUnit::kMgPerBee), 97.0);
  EXPECT_THROW(standardize_unit(0, DoseUnit::kUgPerBee), std::invalid_argument);
  EXPECT_EQ(parse_dose_unit("µg/bee"), DoseUnit::kUgPerBee);
  EXPECT_EQ(parse_dose_unit("UG/BEE"), DoseUnit::kUgPerBee);
  EXPECT_EQ(parse_dose_unit("ng/organism"), DoseUnit::kNgPerOrganism);
  EXPECT_FALSE(parse_dose_unit("ug/kg bw"));
}

TEST(Exposure, Routes) {
  EXPECT_EQ(parse_exposure_type("Oral"), ExposureType::kOral);
  EXPECT_EQ(parse_exposure_type("topical"), ExposureType::kContact);
  EXPECT_EQ(parse_exposure_type("injection"), ExposureType::kOther);
  EXPECT_FALSE(parse_exposure_type(" "));
}

TEST(Aggregate, MediansThenMinimum) {
  const std::vector<Measurement> ms = {
    { ExposureType::kOral, 2 }, { ExposureType::kOral, 4 }, { ExposureType::kOral, 10 },
    { ExposureType::kContact, 1 }, { ExposureType::kContact, 3 } };
  const auto a = aggregate_ld50(ms);
  EXPECT_EQ(a.oral, 4.0);
  EXPECT_EQ(a.contact, 2.0);
  EXPECT_FALSE(a.other);
  EXPECT_EQ(a.overall, 2.0);

  const std::vector<Measurement> one = { { ExposureType::kOral, 7 } };
  EXPECT_EQ(aggregate_ld50(one).overall, 7.0);
  EXPECT_EQ(median({ 1, 2, 3, 4 }), 2.5);
  EXPECT_THROW(aggregate_ld50(std::vector<Measurement> {}), std::invalid_argument);
}

TEST(Label, StrictThreshold) {
  EXPECT_TRUE(label_toxicity(2));
  EXPECT_FALSE(label_toxicity(11));
  EXPECT_FALSE(label_toxicity(500));
  EXPECT_TRUE(label_toxicity(10.999));
}

CuratedDraft draft(const std::string &smiles, double ld50, bool manual,
                   const std::string &source, const std::string &cas = "") {
  CuratedDraft d;
  d.canonical_smiles = canonical_smiles(parse_smiles(smiles));
  d.ld50_ug = ld50;
  d.manual = manual;
  d.provenance = { source };
  d.cas = cas;
  return d;
}

TEST(Merge, ManualOnlyCompoundPassesThrough) {
  const std::vector<CuratedDraft> ds = { draft("CCO", 5, false, "db"),
                                         draft("c1ccccc1", 20, true, "manual_ref") };
  const auto out = merge_drafts(ds, MergePolicy::kMinimum, 11);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[1].canonical_smiles, canonical_smiles(parse_smiles("c1ccccc1")));
  EXPECT_EQ(out[1].label, 0);
  EXPECT_EQ(out[0].id, "PG00001");
  EXPECT_EQ(out[1].id, "PG00002");
}

TEST(Merge, MinimumPolicyKeepsStrongestToxicity) {
  const std::vector<CuratedDraft> ds = { draft("CCO", 5, false, "db"),
                                         draft("CCO", 9, true, "manual") };
  const auto out = merge_drafts(ds, MergePolicy::kMinimum, 11);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].ld50_ug, 5.0);
  EXPECT_EQ(out[0].provenance, (std::vector<std::string> { "db", "manual" }));
  EXPECT_EQ(merge_drafts(ds, MergePolicy::kPreferManual, 11)[0].ld50_ug, 9.0);
}

TEST(Merge, EquivalentSmilesCollapse) {
  const std::vector<CuratedDraft> ds = {
    draft("CCO", 5, false, "a"), draft("OCC", 50, false, "b"),
    draft("C(C)O", 7, false, "c") };
  const auto out = merge_drafts(ds, MergePolicy::kMinimum, 11);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].ld50_ug, 5.0);
}

TEST(Merge, ChargeStatesStayDistinct) {
  const std::vector<CuratedDraft> ds = {
    draft("CC(=O)O", 5, false, "a"), draft("CC(=O)[O-]", 5, false, "a"),
    draft("C[NH3+]", 5, false, "a"), draft("CN", 5, false, "a") };
  const auto out = merge_drafts(ds, MergePolicy::kMinimum, 11);
  EXPECT_EQ(out.size(), 4u);
  std::set<std::string> unique;
  for (const auto &r: out)
    unique.insert(r.canonical_smiles);
  EXPECT_EQ(unique.size(), out.size());
}

TEST(Merge, CasConflictsAreReported) {
  const std::vector<CuratedDraft> ds = { draft("CCO", 5, false, "a", "64-17-5"),
                                         draft("OCC", 6, false, "b", "50-00-0") };
  MergeReport report;
  const auto out = merge_drafts(ds, MergePolicy::kMinimum, 11, &report);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].cas, "50-00-0");
  EXPECT_EQ(report.conflicts.size(), 1u);
}

CurationConfig fixture_config(ResolverConfig *rc) {
  return load_curation_config(testing::data_path("curation/curation.json"), rc);
}

// Hand walk of the fixture (10 input rows):
//  chlorpyrifos: oral 0.1, contact 70 ng = 0.07 -> 0.07, toxic
//  atrazine:     contact 100, oral 0.097 mg = 97 -> 97, not toxic
//  carbaryl:     contact 1.1 plus a manual 9 under another spelling -> 1.1
//  dimethoate:   manual only, 0.15
//  bad check digit, unresolvable CAS, per-kg unit -> quarantined
TEST(Pipeline, HandWalkedFixture) {
  ResolverConfig rc;
  const CurationConfig cc = fixture_config(&rc);
  EXPECT_TRUE(rc.offline);
  PubChemResolver resolver(rc);
  const auto res = run_curation(cc, resolver);
  EXPECT_EQ(curated_dataset_csv(res.records),
            read_text_file(testing::data_path("curation/expected_dataset.csv")));
  EXPECT_EQ(resolver.network_requests(), 0u);
  EXPECT_EQ(res.stats.input_records, 10u);
  EXPECT_EQ(res.stats.contributing_records, 7u);
  EXPECT_EQ(res.stats.quarantined_records, 3u);
  EXPECT_EQ(res.stats.positives, 3u);
  std::set<std::string> stages;
  for (const auto &q: res.quarantine)
    stages.insert(q.stage);
  EXPECT_EQ(stages, (std::set<std::string> { "validate", "resolve", "standardize" }));
}

TEST(Pipeline, IdempotentOnOwnOutput) {
  testing::TempDir dir("idem");
  ResolverConfig rc;
  CurationConfig cc = fixture_config(&rc);
  cc.output_dir = dir / "first";
  PubChemResolver resolver(rc);
  const auto first = run_curation(cc, resolver);
  write_curation_outputs(first, cc);

  CurationConfig again;
  again.manual_files = { dir / "first" / "dataset.csv" };
  again.output_dir = dir / "second";
  MapResolver none({});
  const auto second = run_curation(again, none);
  write_curation_outputs(second, again);
  EXPECT_TRUE(second.quarantine.empty());
  EXPECT_EQ(read_text_file(dir / "first" / "dataset.csv"),
            read_text_file(dir / "second" / "dataset.csv"));
}

// Random mixtures of good and bad rows: every row is accounted for.
TEST(Pipeline, CountConservationOnFuzzedInputs) {
  SplitMix64 rng(31);
  const std::vector<std::string> cas = { "2921-88-2", "1912-24-9", "63-25-2",
                                         "50-29-3", "2921-88-3", "bogus", "" };
  const std::vector<std::string> units = { "ug/bee", "mg/bee", "ng/bee", "ug/kg", "" };
  const std::vector<std::string> routes = { "oral", "contact", "injection", "" };
  const std::map<std::string, std::string> mapping = {
    { "2921-88-2", "CCOP(=S)(OCC)Oc1nc(Cl)c(Cl)cc1Cl" },
    { "1912-24-9", "CCNc1nc(Cl)nc(NC(C)C)n1" },
    { "63-25-2", "C1CC" } };  // broken structure
  for (int t = 0; t < 60; ++t) {
    testing::TempDir dir("fuzz");
    std::string meas = "cas,dose_value,dose_unit,exposure_type,species,year\n";
    const std::size_t rows = rng.below(25);
    for (std::size_t r = 0; r < rows; ++r) {
      const char *values[] = { "1.5", "0", "-2", "abc", "20", "0.001" };
      const char *years[] = { "1990", "", "19x0", "2005" };
      meas += cas[rng.below(cas.size())] + "," + values[rng.below(6)] + "," +
              units[rng.below(units.size())] + "," + routes[rng.below(routes.size())] +
              "," + (rng.below(5) ? "Apis mellifera" : "Bombus") + "," +
              years[rng.below(4)] + "\n";
    }
    std::string man = "cas,smiles,ld50_ug\n";
    const std::size_t mrows = rng.below(6);
    for (std::size_t r = 0; r < mrows; ++r) {
      const char *smiles[] = { "CCO", "OCC", "C1CC", "", "c1ccccc1" };
      man += cas[rng.below(cas.size())] + "," + smiles[rng.below(5)] + "," +
             (rng.below(4) ? "3" : "x") + "\n";
    }
    write_text_file(dir / "m.csv", meas);
    write_text_file(dir / "manual.csv", man);
    CurationConfig cc;
    cc.measurement_files = { dir / "m.csv" };
    cc.manual_files = { dir / "manual.csv" };
    cc.species = "Apis mellifera";
    MapResolver resolver(mapping);
    const auto res = run_curation(cc, resolver);
    EXPECT_EQ(res.stats.input_records, rows + mrows);
    EXPECT_EQ(res.stats.contributing_records + res.stats.quarantined_records,
              res.stats.input_records);
    EXPECT_EQ(res.quarantine.size(), res.stats.quarantined_records);
    for (const auto &q: res.quarantine)
      EXPECT_FALSE(q.reason.empty());
    std::set<std::string> unique;
    for (const auto &r: res.records)
      EXPECT_TRUE(unique.insert(r.canonical_smiles).second);
  }
}

TEST(Pipeline, MissingColumnsAndFiles) {
  testing::TempDir dir("cols");
  write_text_file(dir / "m.csv", "cas,dose_value\n50-00-0,1\n");
  CurationConfig cc;
  cc.measurement_files = { dir / "m.csv" };
  MapResolver none({});
  EXPECT_THROW(run_curation(cc, none), CurationError);
  cc.measurement_files = { dir / "absent.csv" };
  EXPECT_THROW(run_curation(cc, none), CurationError);
  EXPECT_THROW(load_curation_config(dir / "nope.json", nullptr), CurationError);
}

TEST(Pipeline, LargestFragmentPolicy) {
  testing::TempDir dir("frag");
  write_text_file(dir / "manual.csv",
                  "smiles,ld50_ug\n[Na+].[O-]C(=O)COc1ccc(Cl)cc1Cl,100\n");
  CurationConfig cc;
  cc.manual_files = { dir / "manual.csv" };
  cc.fragments = FragmentPolicy::kLargest;
  MapResolver none({});
  const auto res = run_curation(cc, none);
  ASSERT_EQ(res.records.size(), 1u);
  EXPECT_EQ(res.records[0].canonical_smiles.find('.'), std::string::npos);
  cc.fragments = FragmentPolicy::kKeep;
  EXPECT_NE(run_curation(cc, none).records[0].canonical_smiles.find('.'),
            std::string::npos);
}

}  // namespace
}  // namespace pestgraph
