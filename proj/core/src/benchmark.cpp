//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/benchmark.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"
#include "pestgraph/csv.h"
#include "pestgraph/embeddings.h"
#include "pestgraph/fingerprints.h"
#include "pestgraph/format.h"
#include "pestgraph/parallel.h"
#include "pestgraph/rng.h"
#include "pestgraph/split.h"
#include "pestgraph/topofeatures.h"

namespace pestgraph {
namespace {

using Json = nlohmann::ordered_json;

void check_keys(const Json &j, std::initializer_list<const char *> allowed,
                const std::string &where) {
  if (!j.is_object())
    throw ConfigError(where + " must be a JSON object");
  for (const auto &item: j.items()) {
    bool ok = false;
    for (const char *a: allowed)
      ok = ok || item.key() == a;
    if (!ok)
      throw ConfigError("unknown key '" + item.key() + "' in " + where);
  }
}

template <class T>
T get_or(const Json &j, const char *key, T fallback, const std::string &where) {
  if (!j.contains(key))
    return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const std::exception &) {
    throw ConfigError(where + "." + key + " has the wrong type");
  }
}

std::filesystem::path rebase(const std::filesystem::path &p,
                             const std::filesystem::path &base) {
  return p.is_absolute() || base.empty() ? p : base / p;
}

FeatureSpec parse_features(const Json &j, const std::string &where,
                           const std::filesystem::path &base) {
  check_keys(j, { "type", "radius", "bits", "counts", "min_len", "max_len",
                  "bins", "path" },
             where);
  FeatureSpec f;
  if (!j.contains("type"))
    throw ConfigError(where + ".type is required");
  try {
    f.type = parse_feature_type(j.at("type").get<std::string>());
  } catch (const std::invalid_argument &e) {
    throw ConfigError(where + ": " + e.what());
  }
  f.radius = get_or(j, "radius", f.radius, where);
  f.n_bits = get_or(j, "bits", f.n_bits, where);
  f.counts = get_or(j, "counts", f.counts, where);
  f.min_len = get_or(j, "min_len", f.min_len, where);
  f.max_len = get_or(j, "max_len", f.max_len, where);
  f.bins = get_or(j, "bins", f.bins, where);
  if (j.contains("path"))
    f.embeddings = rebase(get_or(j, "path", std::string {}, where), base);
  return f;
}

KernelSpec parse_kernel(const Json &j, const std::string &where) {
  check_keys(j, { "type", "h", "t_max", "bin_width", "seed", "normalize" },
             where);
  KernelSpec k;
  try {
    if (j.contains("type"))
      k.type = parse_kernel_type(j.at("type").get<std::string>());
  } catch (const std::invalid_argument &e) {
    throw ConfigError(where + ": " + e.what());
  }
  k.h = get_or(j, "h", k.h, where);
  k.t_max = get_or(j, "t_max", k.t_max, where);
  k.bin_width = get_or(j, "bin_width", k.bin_width, where);
  k.seed = get_or(j, "seed", k.seed, where);
  k.normalize = get_or(j, "normalize", k.normalize, where);
  return k;
}

void parse_learner(const Json &j, MethodSpec &m, const std::string &where) {
  check_keys(j, { "type", "grid", "n_trees", "max_depth", "min_leaf",
                  "max_features", "class_weight", "l2", "max_iter", "tol",
                  "C" },
             where);
  try {
    m.learner = parse_learner_type(get_or(j, "type", std::string("rf"), where));
  } catch (const std::invalid_argument &e) {
    throw ConfigError(where + ": " + e.what());
  }
  const bool cw = get_or(j, "class_weight", false, where);
  m.forest.n_trees = get_or(j, "n_trees", m.forest.n_trees, where);
  m.forest.max_depth = get_or(j, "max_depth", m.forest.max_depth, where);
  m.forest.min_leaf = get_or(j, "min_leaf", m.forest.min_leaf, where);
  m.forest.max_features = get_or(j, "max_features", m.forest.max_features, where);
  m.forest.class_weight = cw;
  m.logreg.l2 = get_or(j, "l2", m.logreg.l2, where);
  m.logreg.max_iter = get_or(j, "max_iter", m.logreg.max_iter, where);
  m.logreg.class_weight = cw;
  m.svm.C = get_or(j, "C", m.svm.C, where);
  m.svm.class_weight = cw;
  if (j.contains("tol")) {
    m.logreg.tol = get_or(j, "tol", m.logreg.tol, where);
    m.svm.tol = m.logreg.tol;
  }
  if (j.contains("grid")) {
    const Json &g = j.at("grid");
    if (!g.is_object())
      throw ConfigError(where + ".grid must be an object of value lists");
    for (const auto &item: g.items()) {
      if (!item.value().is_array() || item.value().empty())
        throw ConfigError(where + ".grid." + item.key() +
                          " must be a non-empty array");
      GridAxis axis { item.key(), {} };
      for (const auto &v: item.value()) {
        if (!v.is_number())
          throw ConfigError(where + ".grid." + item.key() +
                            " must contain numbers");
        axis.second.push_back(v.get<double>());
      }
      m.grid.push_back(std::move(axis));
    }
  }
}

double sample_std(const std::vector<double> &v, double mean) {
  if (v.size() < 2)
    return 0.0;
  double s = 0;
  for (double x: v)
    s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

std::string run_stamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm {};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "run-%Y%m%d-%H%M%S", &tm);
  return buf;
}

std::string pad(const std::string &s, std::size_t width) {
  // Width in code points so the +/- sign lines up.
  std::size_t cps = 0;
  for (unsigned char c: s)
    cps += (c & 0xC0) != 0x80;
  return s + std::string(width > cps ? width - cps : 0, ' ');
}

std::size_t display_width(const std::string &s) {
  std::size_t cps = 0;
  for (unsigned char c: s)
    cps += (c & 0xC0) != 0x80;
  return cps;
}

struct SplitKey {
  SplitMethod method;
  std::uint64_t seed;
  auto operator<=>(const SplitKey &) const = default;
};

}  // namespace

FeatureType parse_feature_type(const std::string &name) {
  static const std::map<std::string, FeatureType> names {
    { "ecfp", FeatureType::kEcfp },
    { "atompairs", FeatureType::kAtomPairs },
    { "atom_pairs", FeatureType::kAtomPairs },
    { "torsion", FeatureType::kTorsion },
    { "path", FeatureType::kPath },
    { "atom_counts", FeatureType::kAtomCounts },
    { "ltp", FeatureType::kLtp },
    { "moltop", FeatureType::kMoltop },
    { "embeddings", FeatureType::kEmbeddings },
  };
  auto it = names.find(name);
  if (it == names.end())
    throw std::invalid_argument("unknown feature type '" + name + "'");
  return it->second;
}

std::string feature_type_name(FeatureType type) {
  switch (type) {
  case FeatureType::kEcfp: return "ecfp";
  case FeatureType::kAtomPairs: return "atompairs";
  case FeatureType::kTorsion: return "torsion";
  case FeatureType::kPath: return "path";
  case FeatureType::kAtomCounts: return "atom_counts";
  case FeatureType::kLtp: return "ltp";
  case FeatureType::kMoltop: return "moltop";
  case FeatureType::kEmbeddings: return "embeddings";
  }
  return "?";
}

LearnerType parse_learner_type(const std::string &name) {
  if (name == "rf" || name == "random_forest")
    return LearnerType::kRandomForest;
  if (name == "logreg" || name == "logistic")
    return LearnerType::kLogReg;
  if (name == "svm")
    return LearnerType::kSvm;
  throw std::invalid_argument("unknown learner '" + name + "'");
}

std::string learner_type_name(LearnerType type) {
  switch (type) {
  case LearnerType::kRandomForest: return "rf";
  case LearnerType::kLogReg: return "logreg";
  case LearnerType::kSvm: return "svm";
  }
  return "?";
}

SplitMethod parse_split_method(const std::string &name) {
  if (name == "maxmin")
    return SplitMethod::kMaxMin;
  if (name == "time")
    return SplitMethod::kTime;
  if (name == "random")
    return SplitMethod::kRandom;
  throw std::invalid_argument("unknown split '" + name + "'");
}

std::string split_method_name(SplitMethod m) {
  switch (m) {
  case SplitMethod::kMaxMin: return "maxmin";
  case SplitMethod::kTime: return "time";
  case SplitMethod::kRandom: return "random";
  }
  return "?";
}

BenchmarkConfig parse_benchmark_config(const std::string &json_text,
                                       const std::filesystem::path &base_dir) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const std::exception &e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  check_keys(j, { "dataset", "output_dir", "run_name", "seed", "threads",
                  "repeats", "single_repeat_deterministic", "test_fraction",
                  "cv_folds", "splits", "methods", "keep_models" },
             "config");
  BenchmarkConfig c;
  if (j.contains("dataset"))
    c.dataset = rebase(get_or(j, "dataset", std::string {}, "config"), base_dir);
  if (j.contains("output_dir"))
    c.output_dir =
        rebase(get_or(j, "output_dir", std::string {}, "config"), base_dir);
  c.run_name = get_or(j, "run_name", c.run_name, "config");
  c.seed = get_or(j, "seed", c.seed, "config");
  c.threads = get_or(j, "threads", c.threads, "config");
  c.repeats = get_or(j, "repeats", c.repeats, "config");
  c.single_repeat_deterministic = get_or(
      j, "single_repeat_deterministic", c.single_repeat_deterministic, "config");
  c.test_fraction = get_or(j, "test_fraction", c.test_fraction, "config");
  c.cv_folds = get_or(j, "cv_folds", c.cv_folds, "config");
  c.keep_models = get_or(j, "keep_models", c.keep_models, "config");
  if (j.contains("splits")) {
    c.splits.clear();
    for (const auto &s: j.at("splits")) {
      try {
        c.splits.push_back(parse_split_method(s.get<std::string>()));
      } catch (const std::exception &e) {
        throw ConfigError(std::string("config.splits: ") + e.what());
      }
    }
  }
  if (j.contains("methods")) {
    std::size_t k = 0;
    for (const auto &mj: j.at("methods")) {
      const std::string where = "methods[" + std::to_string(k++) + "]";
      check_keys(mj, { "name", "group", "features", "kernel", "learner" },
                 where);
      MethodSpec m;
      m.name = get_or(mj, "name", std::string {}, where);
      m.group = get_or(mj, "group", std::string("Other"), where);
      if (mj.contains("features"))
        m.features = parse_features(mj.at("features"), where + ".features",
                                    base_dir);
      if (mj.contains("kernel"))
        m.kernel = parse_kernel(mj.at("kernel"), where + ".kernel");
      if (mj.contains("learner"))
        parse_learner(mj.at("learner"), m, where + ".learner");
      c.methods.push_back(std::move(m));
    }
  }
  validate_benchmark_config(c);
  return c;
}

BenchmarkConfig load_benchmark_config(const std::filesystem::path &path) {
  if (!std::filesystem::exists(path))
    throw ConfigError("config file '" + path.string() + "' not found");
  return parse_benchmark_config(read_text_file(path), path.parent_path());
}

void validate_benchmark_config(const BenchmarkConfig &c) {
  if (c.methods.empty())
    throw ConfigError("config lists no methods");
  if (c.splits.empty())
    throw ConfigError("config lists no splits");
  if (c.repeats < 1)
    throw ConfigError("repeats must be >= 1");
  if (c.cv_folds < 2)
    throw ConfigError("cv_folds must be >= 2");
  if (!(c.test_fraction > 0 && c.test_fraction < 1))
    throw ConfigError("test_fraction must be in (0, 1)");
  std::set<std::string> names;
  for (const auto &m: c.methods) {
    const std::string where = "method '" + m.name + "'";
    if (m.name.empty())
      throw ConfigError("every method needs a name");
    if (!names.insert(m.name).second)
      throw ConfigError("duplicate method name '" + m.name + "'");
    if (m.features.has_value() == m.kernel.has_value())
      throw ConfigError(where + " needs exactly one of features or kernel");
    if (m.learner == LearnerType::kSvm && !m.kernel)
      throw ConfigError(where + ": svm requires a kernel");
    if (m.learner != LearnerType::kSvm && m.kernel)
      throw ConfigError(where + ": a kernel needs the svm learner");
    if (m.features && m.features->type == FeatureType::kEmbeddings &&
        m.features->embeddings.empty())
      throw ConfigError(where + ": embeddings need a path");
    // Grid keys must be meaningful for the learner.
    try {
      const ParamSet probe = [&] {
        ParamSet p;
        for (const auto &[k, v]: m.grid)
          p[k] = v.front();
        return p;
      }();
      switch (m.learner) {
      case LearnerType::kRandomForest: apply_params(m.forest, probe); break;
      case LearnerType::kLogReg: apply_params(m.logreg, probe); break;
      case LearnerType::kSvm: apply_params(m.svm, probe); break;
      }
    } catch (const std::invalid_argument &e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
}

std::string benchmark_config_to_json(const BenchmarkConfig &c) {
  Json j;
  j["dataset"] = c.dataset.string();
  j["output_dir"] = c.output_dir.string();
  j["run_name"] = c.run_name;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["repeats"] = c.repeats;
  j["single_repeat_deterministic"] = c.single_repeat_deterministic;
  j["test_fraction"] = c.test_fraction;
  j["cv_folds"] = c.cv_folds;
  j["keep_models"] = c.keep_models;
  for (auto s: c.splits)
    j["splits"].push_back(split_method_name(s));
  for (const auto &m: c.methods) {
    Json mj;
    mj["name"] = m.name;
    mj["group"] = m.group;
    if (m.features) {
      const auto &f = *m.features;
      mj["features"] = { { "type", feature_type_name(f.type) },
                         { "radius", f.radius },
                         { "bits", f.n_bits },
                         { "counts", f.counts },
                         { "min_len", f.min_len },
                         { "max_len", f.max_len },
                         { "bins", f.bins } };
      if (!f.embeddings.empty())
        mj["features"]["path"] = f.embeddings.string();
    }
    if (m.kernel)
      mj["kernel"] = { { "type", kernel_type_name(m.kernel->type) },
                       { "h", m.kernel->h },
                       { "t_max", m.kernel->t_max },
                       { "bin_width", m.kernel->bin_width },
                       { "seed", m.kernel->seed },
                       { "normalize", m.kernel->normalize } };
    Json lj;
    lj["type"] = learner_type_name(m.learner);
    switch (m.learner) {
    case LearnerType::kRandomForest:
      lj["n_trees"] = m.forest.n_trees;
      lj["max_depth"] = m.forest.max_depth;
      lj["min_leaf"] = m.forest.min_leaf;
      lj["max_features"] = m.forest.max_features;
      lj["class_weight"] = m.forest.class_weight;
      break;
    case LearnerType::kLogReg:
      lj["l2"] = m.logreg.l2;
      lj["max_iter"] = m.logreg.max_iter;
      lj["tol"] = m.logreg.tol;
      lj["class_weight"] = m.logreg.class_weight;
      break;
    case LearnerType::kSvm:
      lj["C"] = m.svm.C;
      lj["tol"] = m.svm.tol;
      lj["class_weight"] = m.svm.class_weight;
      break;
    }
    for (const auto &[k, v]: m.grid)
      lj["grid"][k] = v;
    mj["learner"] = std::move(lj);
    j["methods"].push_back(std::move(mj));
  }
  return j.dump(2) + "\n";
}

TabularDataset build_features(const FeatureSpec &spec, const MoleculeSet &set,
                              int threads) {
  TabularDataset data;
  data.ids = set.ids();
  for (const auto &r: set.records)
    data.y.push_back(r.label < 0 ? 0 : r.label);

  if (spec.type == FeatureType::kEmbeddings) {
    auto join = load_embeddings(spec.embeddings, data.ids, data.y);
    if (!join.missing.empty())
      throw std::runtime_error(
          "embedding file '" + spec.embeddings.string() + "' lacks " +
          std::to_string(join.missing.size()) + " dataset ids (first: '" +
          join.missing.front() + "')");
    return std::move(join.data);
  }

  const std::size_t n = set.size();
  std::vector<std::vector<double>> rows(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const Molecule &mol = set.records[i].mol;
    auto from_fp = [&](const FingerprintVector &fp) {
      const auto d = fp.dense();
      return std::vector<double>(d.begin(), d.end());
    };
    switch (spec.type) {
    case FeatureType::kEcfp:
      rows[i] = from_fp(ecfp(mol, spec.radius, spec.n_bits, spec.counts));
      break;
    case FeatureType::kAtomPairs:
      rows[i] = from_fp(atom_pairs(mol, spec.n_bits));
      break;
    case FeatureType::kTorsion:
      rows[i] = from_fp(topological_torsion(mol, spec.n_bits));
      break;
    case FeatureType::kPath:
      rows[i] = from_fp(
          path_fingerprint(mol, spec.min_len, spec.max_len, spec.n_bits));
      break;
    case FeatureType::kAtomCounts:
      rows[i] = from_fp(atom_count_vector(mol));
      break;
    case FeatureType::kLtp:
      rows[i] = ltp_features(mol, spec.bins).values;
      break;
    case FeatureType::kMoltop:
      rows[i] = moltop_features(mol, spec.bins).values;
      break;
    case FeatureType::kEmbeddings:
      break;
    }
  });
  data.X = stack_rows(rows);
  return data;
}

void summarize_cell(EvalCell &cell) {
  std::vector<double> m, a;
  for (const auto &r: cell.repeats) {
    m.push_back(r.mcc);
    if (!std::isnan(r.auroc))
      a.push_back(r.auroc);
  }
  auto mean = [](const std::vector<double> &v) {
    if (v.empty())
      return std::numeric_limits<double>::quiet_NaN();
    double s = 0;
    for (double x: v)
      s += x;
    return s / static_cast<double>(v.size());
  };
  cell.mcc_mean = mean(m);
  cell.mcc_std = m.empty() ? 0.0 : sample_std(m, cell.mcc_mean);
  cell.auroc_mean = mean(a);
  cell.auroc_std = a.empty() ? 0.0 : sample_std(a, cell.auroc_mean);
}

BenchmarkResult run_benchmark(const BenchmarkConfig &config,
                              const MoleculeSet &set) {
  validate_benchmark_config(config);
  if (!set.has_labels())
    throw std::runtime_error("benchmark dataset needs a label column");
  const std::size_t n = set.size();
  const std::vector<int> y = set.labels();
  const std::vector<Molecule> mols = set.molecules();

  // Label-free per-method features, computed once.
  std::map<std::string, TabularDataset> features;
  for (const auto &m: config.methods)
    if (m.features)
      features.emplace(m.name, build_features(*m.features, set, config.threads));

  std::map<SplitKey, SplitAssignment> split_cache;
  auto get_split = [&](SplitMethod method, std::uint64_t seed) {
    const SplitKey key { method, method == SplitMethod::kTime ? 0 : seed };
    auto it = split_cache.find(key);
    if (it != split_cache.end())
      return it->second;
    SplitAssignment s;
    switch (method) {
    case SplitMethod::kMaxMin:
      s = maxmin_split(set, config.test_fraction, seed,
                       { 2, 2048, config.threads });
      break;
    case SplitMethod::kTime: s = time_split(set, config.test_fraction); break;
    case SplitMethod::kRandom:
      s = stratified_random_split(set, config.test_fraction, seed);
      break;
    }
    check_partition(s, n);
    split_cache.emplace(key, s);
    return s;
  };

  BenchmarkResult result;
  for (const auto &method: config.methods) {
    for (SplitMethod split: config.splits) {
      const auto t0 = std::chrono::steady_clock::now();
      EvalCell cell;
      cell.group = method.group;
      cell.method = method.name;
      cell.split = split_method_name(split);
      const bool deterministic = method.learner != LearnerType::kRandomForest;
      const int n_rep =
          deterministic && config.single_repeat_deterministic ? 1 : config.repeats;

      for (int r = 0; r < n_rep; ++r) {
        const std::uint64_t seed = derive_seed(config.seed, r);
        const SplitAssignment s = get_split(split, seed);
        const auto &train = s.train_rows;
        const auto &test = s.test_rows;

        std::vector<ParamSet> grid = expand_grid(method.grid);
        FitPredict family;
        MatrixD K;
        ForestConfig forest = method.forest;
        forest.seed = seed;
        forest.threads = config.threads;
        if (method.kernel) {
          // Dictionary from training molecules only; test atoms map through.
          K = compute_kernel(*method.kernel, mols, train, config.threads).values;
          family = svm_family(K, y, method.svm);
        } else if (method.learner == LearnerType::kRandomForest) {
          family = forest_family(features.at(method.name), forest);
        } else {
          family = logreg_family(features.at(method.name), method.logreg);
        }

        ParamSet best = grid.front();
        if (grid.size() > 1)
          best = grid_search_cv(y, train, grid, family, mcc_metric(),
                                config.cv_folds, seed)
                     .best;

        RepeatResult rep;
        rep.seed = seed;
        rep.best_params = param_set_to_string(best);
        Predictions pred;
        if (method.kernel) {
          std::vector<int> y_train;
          for (auto i: train)
            y_train.push_back(y[i]);
          auto model = train_svm_precomputed(kernel_submatrix(K, train, train),
                                             y_train,
                                             apply_params(method.svm, best));
          const auto cross = kernel_submatrix(K, test, train);
          pred = { model.decision(cross), model.predict(cross) };
          if (config.keep_models)
            rep.model_json = model.to_json();
        } else {
          const TabularDataset &data = features.at(method.name);
          const TabularDataset tr = data.subset(train), te = data.subset(test);
          if (method.learner == LearnerType::kRandomForest) {
            auto model = train_random_forest(tr, apply_params(forest, best));
            pred = { model.predict_proba(te.X), model.predict(te.X) };
            if (config.keep_models)
              rep.model_json = model.to_json();
          } else {
            auto model = train_logreg(tr, apply_params(method.logreg, best));
            pred = { model.probability(te.X), model.predict(te.X) };
            if (config.keep_models)
              rep.model_json = model.to_json();
          }
        }
        std::vector<int> y_test;
        for (auto i: test)
          y_test.push_back(y[i]);
        rep.confusion = confusion_matrix(y_test, pred.labels);
        rep.mcc = pestgraph::mcc(rep.confusion);
        const bool both = std::count(y_test.begin(), y_test.end(), 1) > 0 &&
                          std::count(y_test.begin(), y_test.end(), 0) > 0;
        rep.auroc = both ? auroc(pred.scores, y_test)
                         : std::numeric_limits<double>::quiet_NaN();
        cell.repeats.push_back(std::move(rep));
      }
      summarize_cell(cell);
      cell.wall_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

BenchmarkResult run_benchmark(const BenchmarkConfig &config) {
  if (!std::filesystem::exists(config.dataset))
    throw std::runtime_error("dataset '" + config.dataset.string() +
                             "' not found");
  const MoleculeSet set = load_molecule_set(config.dataset);
  if (!set.rejected.empty())
    throw std::runtime_error(
        config.dataset.string() + ": " + std::to_string(set.rejected.size()) +
        " unreadable rows (first at line " +
        std::to_string(set.rejected.front().line) + ": " +
        set.rejected.front().reason + ")");
  BenchmarkResult result = run_benchmark(config, set);

  const std::string name = config.run_name.empty() ? run_stamp() : config.run_name;
  result.run_dir = config.output_dir / name;
  std::filesystem::create_directories(result.run_dir);
  write_text_file(result.run_dir / "config.json", benchmark_config_to_json(config));
  write_text_file(result.run_dir / "report.csv", report_csv(result));
  write_text_file(result.run_dir / "report.txt", report_text(result));
  write_text_file(result.run_dir / "repeats.csv", repeats_csv(result));
  return result;
}

std::string report_csv(const BenchmarkResult &result) {
  std::string out =
      "group,method,split,mcc_mean,mcc_std,auroc_mean,auroc_std,n_repeats\n";
  for (const auto &c: result.cells)
    out += csv_join({ c.group, c.method, c.split, format_double(c.mcc_mean),
                      format_double(c.mcc_std), format_double(c.auroc_mean),
                      format_double(c.auroc_std),
                      std::to_string(c.repeats.size()) }) +
           "\n";
  return out;
}

std::string repeats_csv(const BenchmarkResult &result) {
  std::string out =
      "group,method,split,repeat,seed,tp,fp,tn,fn,mcc,auroc,best_params\n";
  for (const auto &c: result.cells)
    for (std::size_t r = 0; r < c.repeats.size(); ++r) {
      const auto &rep = c.repeats[r];
      out += csv_join({ c.group, c.method, c.split, std::to_string(r),
                        std::to_string(rep.seed),
                        std::to_string(rep.confusion.tp),
                        std::to_string(rep.confusion.fp),
                        std::to_string(rep.confusion.tn),
                        std::to_string(rep.confusion.fn),
                        format_double(rep.mcc), format_double(rep.auroc),
                        rep.best_params }) +
             "\n";
    }
  return out;
}

std::string report_text(const BenchmarkResult &result) {
  // Rows are methods in config order, columns are splits.
  std::vector<std::string> splits;
  std::vector<std::pair<std::string, std::string>> methods;
  for (const auto &c: result.cells) {
    if (std::find(splits.begin(), splits.end(), c.split) == splits.end())
      splits.push_back(c.split);
    const std::pair<std::string, std::string> key { c.group, c.method };
    if (std::find(methods.begin(), methods.end(), key) == methods.end())
      methods.push_back(key);
  }
  std::map<std::pair<std::string, std::string>, const EvalCell *> at;
  std::map<std::string, double> best;
  for (const auto &c: result.cells) {
    at[{ c.method, c.split }] = &c;
    if (!best.count(c.split) || c.mcc_mean > best[c.split])
      best[c.split] = c.mcc_mean;
  }

  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header { "group", "method" };
  for (const auto &s: splits)
    header.push_back(s + " MCC");
  header.push_back("best");
  table.push_back(header);
  for (const auto &[group, method]: methods) {
    std::vector<std::string> row { group, method };
    std::string best_on;
    for (const auto &s: splits) {
      auto it = at.find({ method, s });
      if (it == at.end()) {
        row.push_back("-");
        continue;
      }
      const EvalCell &c = *it->second;
      std::string v = format_fixed(c.mcc_mean, 2);
      if (c.repeats.size() > 1)
        v += " \xc2\xb1 " + format_fixed(c.mcc_std, 2);
      row.push_back(v);
      if (c.mcc_mean == best[s])
        best_on += (best_on.empty() ? "" : ",") + s;
    }
    row.push_back(best_on.empty() ? "-" : best_on);
    table.push_back(row);
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto &row: table)
    for (std::size_t k = 0; k < row.size(); ++k)
      width[k] = std::max(width[k], display_width(row[k]));
  std::string out;
  for (std::size_t r = 0; r < table.size(); ++r) {
    std::string line;
    for (std::size_t k = 0; k < table[r].size(); ++k)
      line += (k ? "  " : "") +
              (k + 1 < table[r].size() ? pad(table[r][k], width[k])
                                       : table[r][k]);
    out += line + "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (auto w: width)
        total += w + 2;
      out += std::string(total - 2, '-') + "\n";
    }
  }
  return out;
}

}  // namespace pestgraph
