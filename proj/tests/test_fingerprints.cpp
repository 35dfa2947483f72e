//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "oracles.h"
#include "pestgraph/elements.h"
#include "pestgraph/fingerprints.h"
#include "pestgraph/smiles.h"
#include "test_util.h"

namespace pestgraph {
namespace {

std::vector<std::uint32_t> sorted_counts(const FingerprintVector &fp) {
  std::vector<std::uint32_t> c;
  for (auto [id, n]: fp.features)
    c.push_back(n);
  std::sort(c.begin(), c.end());
  return c;
}

template <class Key>
std::vector<std::uint32_t> sorted_counts(const std::map<Key, std::uint32_t> &m) {
  std::vector<std::uint32_t> c;
  for (auto &[k, n]: m)
    c.push_back(n);
  std::sort(c.begin(), c.end());
  return c;
}

std::uint64_t total(const FingerprintVector &fp) {
  std::uint64_t t = 0;
  for (auto [id, n]: fp.features)
    t += n;
  return t;
}

TEST(Ecfp, EthaneRadiusZeroHasOneFeature) {
  const auto fp = ecfp(parse_smiles("CC"), 0, 0, true);
  ASSERT_EQ(fp.num_features(), 1u);
  EXPECT_EQ(fp.features[0].second, 2u);
}

TEST(Ecfp, RadiusOnlyAddsFeatures) {
  const Molecule m = parse_smiles("CCO");
  for (int r = 0; r < 4; ++r)
    EXPECT_GE(ecfp(m, r + 1, 0, false).num_features(),
              ecfp(m, r, 0, false).num_features());
}

TEST(Ecfp, PermutationInvariant) {
  SplitMix64 rng(1);
  for (const auto &e: testing::load_corpus()) {
    const Molecule m = parse_smiles(e.smiles);
    EXPECT_EQ(ecfp(m, 2, 2048, true), ecfp(testing::shuffled(m, rng), 2, 2048, true))
        << e.name;
  }
}

TEST(Ecfp, FoldedBitsInRangeAndCountsPreserved) {
  const Molecule m = parse_smiles("CC1(C)C(C=C(Cl)Cl)C1C(=O)OC(C#N)c1cccc(Oc2ccccc2)c1");
  const auto raw = ecfp(m, 2, 0, true);
  const auto folded = ecfp(m, 2, 64, true);
  EXPECT_EQ(folded, fold(raw, 64));
  EXPECT_EQ(total(raw), total(folded));
  for (auto [id, n]: folded.features)
    EXPECT_LT(id, 64u);
  EXPECT_TRUE(std::is_sorted(folded.features.begin(), folded.features.end()));
  EXPECT_THROW(ecfp(m, 2, 100, false), std::invalid_argument);
}

TEST(AtomPairs, EthaneAndSalt) {
  const auto fp = atom_pairs(parse_smiles("CC"), 0);
  ASSERT_EQ(fp.num_features(), 1u);
  EXPECT_EQ(fp.features[0].second, 1u);
  EXPECT_EQ(atom_pairs(parse_smiles("[Na+].[Cl-]"), 0).num_features(), 0u);
}

TEST(AtomPairs, ElevenAtomMoleculeMatchesDoubleLoop) {
  const Molecule m = parse_smiles("CC(C)Oc1cccc(N)c1");
  ASSERT_EQ(m.num_atoms(), 11);
  const auto d = oracle::bfs_distances(m);
  std::map<std::tuple<int, int, int, int, int, int, int>, std::uint32_t> pairs;
  std::uint32_t n = 0;
  for (int i = 0; i < m.num_atoms(); ++i)
    for (int j = i + 1; j < m.num_atoms(); ++j) {
      auto key_of = [&](int a) {
        int heavy = 0;
        for (const Neighbor &nb: m.neighbors(a))
          heavy += m.atom(nb.atom).element != 1;
        return std::tuple(m.atom(a).element, heavy, m.atom(a).aromatic ? 1 : 0);
      };
      auto a = key_of(i), b = key_of(j);
      if (b < a)
        std::swap(a, b);
      ++pairs[std::tuple_cat(a, std::tuple(d[i][j]), b)];
      ++n;
    }
  const auto fp = atom_pairs(m, 0);
  EXPECT_EQ(total(fp), n);
  EXPECT_EQ(sorted_counts(fp), sorted_counts(pairs));
}

TEST(Torsion, ButaneAndPropane) {
  const auto fp = topological_torsion(parse_smiles("CCCC"), 0);
  ASSERT_EQ(fp.num_features(), 1u);
  EXPECT_EQ(fp.features[0].second, 1u);
  EXPECT_EQ(topological_torsion(parse_smiles("CCC"), 0).num_features(), 0u);
}

TEST(Torsion, CountsMatchFourPathEnumeration) {
  for (const char *s: { "C1CCCCC1", "c1ccccc1", "CC(C)(C)CC", "C1CC2CCC1C2",
                        "OC(=O)c1ccccc1O" }) {
    const Molecule m = parse_smiles(s);
    EXPECT_EQ(total(topological_torsion(m, 0)), oracle::simple_paths(m, 3).size())
        << s;
  }
  EXPECT_EQ(total(topological_torsion(parse_smiles("C1CCCCC1"), 0)), 6u);
}

TEST(Paths, EthaneSingleBond) {
  const auto fp = path_fingerprint(parse_smiles("CC"), 1, 1, 0);
  EXPECT_EQ(fp.num_features(), 1u);
}

TEST(Paths, BenzeneBondsAreOneFeature) {
  const auto fp = path_fingerprint(parse_smiles("c1ccccc1"), 1, 1, 0);
  ASSERT_EQ(fp.num_features(), 1u);
  EXPECT_EQ(fp.features[0].second, 6u);
  EXPECT_EQ(oracle::simple_paths(parse_smiles("c1ccccc1"), 1).size(), 6u);
}

TEST(Paths, MultisetMatchesDfsEnumeration) {
  SplitMix64 rng(4);
  std::vector<Molecule> mols = { parse_smiles("CC(=O)Oc1ccccc1"),
                                 parse_smiles("C1CC2CC1CO2") };
  for (int t = 0; t < 10; ++t)
    mols.push_back(testing::random_molecule(rng, 3 + static_cast<int>(rng.below(6)),
                                            static_cast<int>(rng.below(3))));
  for (const Molecule &m: mols) {
    ASSERT_LE(m.num_atoms(), 10);
    std::map<std::vector<int>, std::uint32_t> ref;
    for (int len = 1; len <= 5; ++len)
      for (const auto &p: oracle::simple_paths(m, len)) {
        std::vector<int> fwd;
        for (std::size_t k = 0; k < p.size(); ++k) {
          if (k > 0)
            fwd.push_back(static_cast<int>(
                m.bond(*m.bond_between(p[k - 1], p[k])).order));
          fwd.push_back(m.atom(p[k]).element * 2 + m.atom(p[k]).aromatic);
        }
        std::vector<int> rev(fwd.rbegin(), fwd.rend());
        ++ref[std::min(fwd, rev)];
      }
    const auto fp = path_fingerprint(m, 1, 5, 0);
    EXPECT_EQ(sorted_counts(fp), sorted_counts(ref));
  }
}

TEST(AtomCounts, Ethanol) {
  const auto fp = atom_count_vector(parse_smiles("CCO"));
  const auto schema = atom_count_schema();
  const auto dense = fp.dense();
  ASSERT_EQ(dense.size(), schema.size());
  std::map<std::string, std::uint32_t> got;
  for (std::size_t i = 0; i < schema.size(); ++i)
    if (dense[i])
      got[schema[i]] = dense[i];
  const std::map<std::string, std::uint32_t> want = {
    { "C", 2 }, { "O", 1 }, { "heavy_atoms", 3 }, { "bonds", 2 } };
  EXPECT_EQ(got, want);
}

TEST(AtomCounts, CorpusMatchesRecount) {
  const auto schema = atom_count_schema();
  const auto &vocab = default_count_vocabulary();
  const auto corpus = testing::load_corpus();
  for (std::size_t k = 0; k < 100 && k < corpus.size(); ++k) {
    const Molecule m = parse_smiles(corpus[k].smiles);
    std::map<std::string, std::uint32_t> want;
    for (const Atom &a: m.atoms()) {
      const std::string sym(element_symbol(a.element));
      const bool known = std::find(vocab.begin(), vocab.end(), sym) != vocab.end();
      ++want[known ? sym : "other"];
      if (a.element != 1)
        ++want["heavy_atoms"];
    }
    if (m.num_bonds())
      want["bonds"] = m.num_bonds();
    const auto dense = atom_count_vector(m).dense();
    std::map<std::string, std::uint32_t> got;
    for (std::size_t i = 0; i < schema.size(); ++i)
      if (dense[i])
        got[schema[i]] = dense[i];
    EXPECT_EQ(got, want) << corpus[k].name;
  }
}

FingerprintVector presence(std::vector<std::uint64_t> ids) {
  FingerprintVector fp;
  fp.scheme = "test";
  for (auto id: ids)
    fp.features.emplace_back(id, 1);
  return fp;
}

TEST(Tanimoto, Definitions) {
  const auto a = presence({ 1, 2, 3 });
  EXPECT_DOUBLE_EQ(tanimoto(a, a), 1.0);
  EXPECT_DOUBLE_EQ(tanimoto(a, presence({ 7, 8 })), 0.0);
  EXPECT_DOUBLE_EQ(tanimoto(a, presence({ 2, 3, 4 })), 0.5);
  FingerprintVector other = presence({ 1 });
  other.scheme = "different";
  EXPECT_THROW(tanimoto(a, other), SchemeMismatch);
}

TEST(Tanimoto, CountVariant) {
  FingerprintVector a, b;
  a.scheme = b.scheme = "test";
  a.features = { { 1, 2 }, { 2, 1 } };
  b.features = { { 1, 1 }, { 3, 4 } };
  // sum min / sum max = 1 / (2 + 1 + 4)
  EXPECT_DOUBLE_EQ(tanimoto_counts(a, b), 1.0 / 7.0);
}

TEST(Tanimoto, RandomSetsMatchOracle) {
  SplitMix64 rng(13);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint64_t> x, y;
    for (int i = 0; i < 30; ++i) {
      if (rng.below(2))
        x.push_back(i);
      if (rng.below(3) == 0)
        y.push_back(i);
    }
    EXPECT_DOUBLE_EQ(tanimoto(presence(x), presence(y)),
                     oracle::set_tanimoto(x, y));
  }
}

TEST(BulkTanimoto, SelfMatrix) {
  std::vector<FingerprintVector> fps;
  for (const char *s: { "CCO", "c1ccccc1O", "CC(=O)O" })
    fps.push_back(ecfp(parse_smiles(s), 2, 2048, false));
  const MatrixD m = bulk_tanimoto_matrix(fps, fps);
  ASSERT_EQ(m.rows(), 3u);
  ASSERT_EQ(m.cols(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(m(i, i), 1.0);
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(m(i, j), m(j, i));
  }
}

TEST(BulkTanimoto, MatchesScalarCallsAndThreads) {
  std::vector<FingerprintVector> a, b;
  const auto corpus = testing::load_corpus();
  for (std::size_t k = 0; k < 40; ++k)
    a.push_back(ecfp(parse_smiles(corpus[k].smiles), 2, 1024, true));
  for (std::size_t k = 40; k < 70; ++k)
    b.push_back(ecfp(parse_smiles(corpus[k].smiles), 2, 1024, true));
  for (bool counts: { false, true }) {
    const MatrixD one = bulk_tanimoto_matrix(a, b, 1, counts);
    const MatrixD four = bulk_tanimoto_matrix(a, b, 4, counts);
    EXPECT_EQ(one, four);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        EXPECT_EQ(one(i, j), counts ? tanimoto_counts(a[i], b[j])
                                    : tanimoto(a[i], b[j]));
  }
}

TEST(Serialization, CsvAndJson) {
  const auto fp = ecfp(parse_smiles("CCO"), 1, 64, false);
  const std::string line = fingerprint_to_csv(fp, "ethanol", false);
  EXPECT_EQ(line.rfind("ethanol,", 0), 0u);
  EXPECT_NE(line.find(fp.scheme), std::string::npos);
  EXPECT_EQ(dense_hex(fp).size(), 16u);
  EXPECT_NE(fingerprint_to_json(fp, "ethanol", true).find("\"ethanol\""),
            std::string::npos);
}

}  // namespace
}  // namespace pestgraph
