//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_BENCHMARK_H_
#define PESTGRAPH_BENCHMARK_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pestgraph/kernels.h"
#include "pestgraph/metrics.h"
#include "pestgraph/model_selection.h"
#include "pestgraph/molset.h"
#include "pestgraph/tabular.h"

namespace pestgraph {

class ConfigError: public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class FeatureType {
  kEcfp,
  kAtomPairs,
  kTorsion,
  kPath,
  kAtomCounts,
  kLtp,
  kMoltop,
  kEmbeddings,
};

FeatureType parse_feature_type(const std::string &name);
std::string feature_type_name(FeatureType type);

struct FeatureSpec {
  FeatureType type = FeatureType::kEcfp;
  int radius = 2;
  std::uint32_t n_bits = 2048;
  bool counts = false;
  int min_len = 1;  // path fingerprints
  int max_len = 7;
  int bins = 10;    // ltp / moltop histograms
  std::filesystem::path embeddings;  // kEmbeddings
};

enum class LearnerType { kRandomForest, kLogReg, kSvm };

LearnerType parse_learner_type(const std::string &name);
std::string learner_type_name(LearnerType type);

struct MethodSpec {
  std::string name;
  std::string group;
  std::optional<FeatureSpec> features;
  std::optional<KernelSpec> kernel;
  LearnerType learner = LearnerType::kRandomForest;
  std::vector<GridAxis> grid;  // empty: learner defaults only
  ForestConfig forest;
  LogRegConfig logreg;
  SvmConfig svm;
};

enum class SplitMethod { kMaxMin, kTime, kRandom };

SplitMethod parse_split_method(const std::string &name);
std::string split_method_name(SplitMethod m);

struct BenchmarkConfig {
  std::filesystem::path dataset;
  std::filesystem::path output_dir = "runs";
  std::string run_name;  // empty: stamped from the wall clock
  std::uint64_t seed = 0;
  int threads = 1;
  int repeats = 5;
  bool single_repeat_deterministic = true;  // logreg / svm cells run once
  double test_fraction = 0.2;
  int cv_folds = 3;
  std::vector<SplitMethod> splits { SplitMethod::kMaxMin, SplitMethod::kTime };
  std::vector<MethodSpec> methods;
  bool keep_models = false;  // store serialized final models per repeat
};

// Parses and validates. Relative paths resolve against `base_dir`. Throws
// ConfigError for unknown keys/values or incompatible combinations (an SVM
// without a kernel, a kernel with a non-SVM learner, ...).
BenchmarkConfig parse_benchmark_config(const std::string &json_text,
                                       const std::filesystem::path &base_dir);
BenchmarkConfig load_benchmark_config(const std::filesystem::path &path);
void validate_benchmark_config(const BenchmarkConfig &config);
std::string benchmark_config_to_json(const BenchmarkConfig &config);

struct RepeatResult {
  std::uint64_t seed = 0;
  Confusion confusion;
  double mcc = 0.0;
  double auroc = 0.0;  // NaN when the test set has one class
  std::string best_params;
  std::string model_json;  // only with keep_models
};

struct EvalCell {
  std::string group;
  std::string method;
  std::string split;
  std::vector<RepeatResult> repeats;
  double mcc_mean = 0.0;
  double mcc_std = 0.0;  // sample std; 0 for one repeat
  double auroc_mean = 0.0;
  double auroc_std = 0.0;
  double wall_seconds = 0.0;
};

struct BenchmarkResult {
  std::vector<EvalCell> cells;
  std::filesystem::path run_dir;  // empty when nothing was written
};

// Row-aligned features for every molecule (label-free).
TabularDataset build_features(const FeatureSpec &spec, const MoleculeSet &set,
                              int threads = 1);

// Runs every (method, split) cell on an already-loaded dataset. Nothing is
// written to disk.
BenchmarkResult run_benchmark(const BenchmarkConfig &config,
                              const MoleculeSet &set);

// Loads config.dataset, runs, and writes config.json, report.csv,
// report.txt and repeats.csv under output_dir/run_name.
BenchmarkResult run_benchmark(const BenchmarkConfig &config);

// Summary statistics over a cell's repeats.
void summarize_cell(EvalCell &cell);

std::string report_csv(const BenchmarkResult &result);
std::string report_text(const BenchmarkResult &result);
std::string repeats_csv(const BenchmarkResult &result);

}  // namespace pestgraph

#endif  // PESTGRAPH_BENCHMARK_H_
