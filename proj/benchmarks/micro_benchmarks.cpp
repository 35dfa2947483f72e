//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pestgraph/canonical.h"
#include "pestgraph/fingerprints.h"
#include "pestgraph/forest.h"
#include "pestgraph/kernels.h"
#include "pestgraph/rng.h"
#include "pestgraph/smiles.h"

namespace {

using namespace pestgraph;

const std::vector<std::string> &corpus_smiles() {
  static const std::vector<std::string> smiles = [] {
    std::vector<std::string> out;
    std::ifstream in(PESTGRAPH_CORPUS);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#')
        continue;
      std::istringstream ss(line);
      std::string s;
      ss >> s;
      out.push_back(s);
    }
    return out;
  }();
  return smiles;
}

const std::vector<Molecule> &corpus() {
  static const std::vector<Molecule> mols = [] {
    std::vector<Molecule> out;
    for (const auto &s: corpus_smiles())
      out.push_back(parse_smiles(s));
    return out;
  }();
  return mols;
}

void BM_ParseCorpus(benchmark::State &state) {
  for (auto _: state)
    for (const auto &s: corpus_smiles())
      benchmark::DoNotOptimize(parse_smiles(s));
  state.SetItemsProcessed(state.iterations() * corpus_smiles().size());
}
BENCHMARK(BM_ParseCorpus);

void BM_CanonicalCorpus(benchmark::State &state) {
  for (auto _: state)
    for (const auto &m: corpus())
      benchmark::DoNotOptimize(canonical_smiles(m));
  state.SetItemsProcessed(state.iterations() * corpus().size());
}
BENCHMARK(BM_CanonicalCorpus);

void BM_Ecfp(benchmark::State &state) {
  const int radius = static_cast<int>(state.range(0));
  for (auto _: state)
    for (const auto &m: corpus())
      benchmark::DoNotOptimize(ecfp(m, radius, 2048, false));
  state.SetItemsProcessed(state.iterations() * corpus().size());
}
BENCHMARK(BM_Ecfp)->Arg(1)->Arg(2)->Arg(3);

void BM_BulkTanimoto(benchmark::State &state) {
  std::vector<FingerprintVector> fps;
  for (const auto &m: corpus())
    fps.push_back(ecfp(m, 2, 2048, false));
  for (auto _: state)
    benchmark::DoNotOptimize(bulk_tanimoto_matrix(fps, fps));
  state.SetItemsProcessed(state.iterations() * fps.size() * fps.size());
}
BENCHMARK(BM_BulkTanimoto);

void BM_WLKernel(benchmark::State &state) {
  for (auto _: state)
    benchmark::DoNotOptimize(wl_kernel_matrix(corpus(), 3));
}
BENCHMARK(BM_WLKernel);

void BM_WLOAKernel(benchmark::State &state) {
  for (auto _: state)
    benchmark::DoNotOptimize(wloa_kernel_matrix(corpus(), 3));
}
BENCHMARK(BM_WLOAKernel);

void BM_RandomForest(benchmark::State &state) {
  std::vector<std::vector<double>> rows;
  TabularDataset data;
  std::size_t i = 0;
  for (const auto &m: corpus()) {
    rows.push_back({});
    for (auto v: ecfp(m, 2, 256, false).dense())
      rows.back().push_back(v);
    data.y.push_back(static_cast<int>(i % 3 == 0));
    data.ids.push_back(std::to_string(i++));
  }
  data.X = stack_rows(rows);
  ForestConfig cfg;
  cfg.n_trees = static_cast<int>(state.range(0));
  for (auto _: state)
    benchmark::DoNotOptimize(train_random_forest(data, cfg));
}
BENCHMARK(BM_RandomForest)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
