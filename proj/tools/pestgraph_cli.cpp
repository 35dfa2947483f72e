//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_config.h"
#include "pestgraph/benchmark.h"
#include "pestgraph/canonical.h"
#include "pestgraph/csv.h"
#include "pestgraph/curation.h"
#include "pestgraph/diversity.h"
#include "pestgraph/fingerprints.h"
#include "pestgraph/format.h"
#include "pestgraph/graph.h"
#include "pestgraph/kernels.h"
#include "pestgraph/molset.h"
#include "pestgraph/parallel.h"
#include "pestgraph/resolver.h"
#include "pestgraph/smiles.h"
#include "pestgraph/split.h"
#include "pestgraph/topofeatures.h"

namespace fs = std::filesystem;
using namespace pestgraph;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

// Thrown for problems the user can fix on the command line.
struct UsageError: std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  int threads = 1;
  bool offline = false;
  std::string config;
};

// Writes to `path`, or stdout when empty.
void emit(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

// SMILES inputs: positional strings, or the first token of each line of a
// file. Blank and '#' comment lines are kept (as empty entries) so output
// stays line-aligned.
std::vector<std::string> smiles_inputs(const std::vector<std::string> &args,
                                       const std::string &file) {
  if (!file.empty()) {
    if (!fs::exists(file))
      throw UsageError("input file '" + file + "' not found");
    std::vector<std::string> out;
    std::istringstream in(read_text_file(file));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      std::istringstream ls(line);
      std::string tok;
      ls >> tok;
      if (!tok.empty() && tok[0] == '#')
        tok.clear();
      out.push_back(tok);
    }
    return out;
  }
  return args;
}

MoleculeSet load_set(const std::string &path) {
  if (path.empty())
    throw UsageError("--input is required");
  if (!fs::exists(path))
    throw UsageError("input file '" + path + "' not found");
  MoleculeSet set = load_molecule_set(path);
  if (!set.rejected.empty()) {
    for (const auto &r: set.rejected)
      std::cerr << path << ":" << r.line << ": " << r.reason << "\n";
    throw std::runtime_error(std::to_string(set.rejected.size()) +
                             " unreadable rows in '" + path + "'");
  }
  return set;
}

int cmd_parse(const std::vector<std::string> &args, const std::string &file) {
  int bad = 0;
  for (const auto &s: smiles_inputs(args, file)) {
    if (s.empty()) {
      std::cout << "\n";
      continue;
    }
    try {
      const Molecule mol = parse_smiles(s);
      std::cout << "atoms=" << mol.num_atoms() << " bonds=" << mol.num_bonds()
                << " components=" << component_atom_sets(mol).size() << "\n";
    } catch (const SmilesError &e) {
      std::cout << "error: " << e.what() << "\n";
      ++bad;
    }
  }
  return bad ? kDataError : 0;
}

int cmd_canon(const std::vector<std::string> &args, const std::string &file) {
  int bad = 0;
  for (const auto &s: smiles_inputs(args, file)) {
    if (s.empty()) {
      std::cout << "\n";
      continue;
    }
    try {
      std::cout << canonical_smiles(parse_smiles(s)) << "\n";
    } catch (const SmilesError &e) {
      std::cout << "\n";
      std::cerr << "'" << s << "': " << e.what() << "\n";
      ++bad;
    }
  }
  return bad ? kDataError : 0;
}

struct FingerprintOptions {
  std::string input, output, scheme = "ecfp", format = "csv";
  int radius = 2, min_len = 1, max_len = 7;
  std::uint32_t bits = 2048;
  bool counts = false, dense = false;
};

int cmd_fingerprint(const FingerprintOptions &o, const Globals &g) {
  const MoleculeSet set = load_set(o.input);
  std::vector<FingerprintVector> fps(set.size());
  parallel_for(set.size(), g.threads, [&](std::size_t i) {
    const Molecule &m = set.records[i].mol;
    if (o.scheme == "ecfp")
      fps[i] = ecfp(m, o.radius, o.bits, o.counts);
    else if (o.scheme == "atompairs")
      fps[i] = atom_pairs(m, o.bits);
    else if (o.scheme == "torsion")
      fps[i] = topological_torsion(m, o.bits);
    else if (o.scheme == "path")
      fps[i] = path_fingerprint(m, o.min_len, o.max_len, o.bits);
    else
      fps[i] = atom_count_vector(m);
  });
  std::string out;
  if (o.format == "csv") {
    out = fingerprint_csv_header() + "\n";
    for (std::size_t i = 0; i < fps.size(); ++i)
      out += fingerprint_to_csv(fps[i], set.records[i].id, o.dense) + "\n";
  } else {
    for (std::size_t i = 0; i < fps.size(); ++i)
      out += fingerprint_to_json(fps[i], set.records[i].id, o.dense) + "\n";
  }
  emit(o.output, out);
  return 0;
}

struct KernelOptions {
  std::string input, output, type = "wloa";
  int h = 3, t_max = 3;
  double bin_width = 0.05;
  bool raw = false;
};

int cmd_kernel(const KernelOptions &o, const Globals &g) {
  const MoleculeSet set = load_set(o.input);
  KernelSpec spec;
  try {
    spec.type = parse_kernel_type(o.type);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  spec.h = o.h;
  spec.t_max = o.t_max;
  spec.bin_width = o.bin_width;
  spec.seed = g.seed;
  spec.normalize = !o.raw;
  const auto mols = set.molecules();
  KernelMatrix k = compute_kernel(spec, mols, {}, g.threads);
  k.ids = set.ids();
  emit(o.output, kernel_to_csv(k));
  return 0;
}

int cmd_features(const std::string &input, const std::string &output,
                 const std::string &type, int bins, const Globals &g) {
  if (type != "ltp" && type != "moltop")
    throw UsageError("--type must be ltp or moltop");
  const MoleculeSet set = load_set(input);
  std::vector<FeatureVector> rows(set.size());
  parallel_for(set.size(), g.threads, [&](std::size_t i) {
    rows[i] = type == "ltp" ? ltp_features(set.records[i].mol, bins)
                            : moltop_features(set.records[i].mol, bins);
  });
  std::vector<std::string> header { "id" };
  const auto schema = type == "ltp" ? ltp_features(parse_smiles("C"), bins).schema
                                    : moltop_features(parse_smiles("C"), bins).schema;
  header.insert(header.end(), schema.begin(), schema.end());
  std::string out = csv_join(header) + "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += csv_escape(set.records[i].id);
    for (double v: rows[i].values)
      out += "," + format_double(v);
    out += "\n";
  }
  emit(output, out);
  return 0;
}

int cmd_split(const std::string &input, const std::string &method,
              double fraction, const std::string &output, const Globals &g) {
  const MoleculeSet set = load_set(input);
  SplitAssignment s;
  if (method == "maxmin")
    s = maxmin_split(set, fraction, g.seed, { 2, 2048, g.threads });
  else if (method == "time")
    s = time_split(set, fraction);
  else if (method == "random")
    s = stratified_random_split(set, fraction, g.seed);
  else
    throw UsageError("--method must be maxmin, time or random");
  const auto ids = set.ids();
  const std::string csv = split_to_csv(s, ids);
  if (output.empty() || output == "-") {
    std::cout << csv;
    std::cerr << split_sidecar_json(s);
  } else {
    write_text_file(output, csv);
    write_text_file(output + ".json", split_sidecar_json(s));
  }
  return 0;
}

int cmd_diversity(const std::vector<std::string> &inputs,
                  const std::string &output, const Globals &g) {
  if (inputs.empty())
    throw UsageError("diversity needs at least one dataset file");
  std::vector<NamedFingerprints> sets;
  for (const auto &path: inputs) {
    const MoleculeSet s = load_set(path);
    sets.push_back({ s.name, diversity_fingerprints(s, g.threads) });
    if (s.size() >= 2) {
      const auto stats = intra_dataset_diversity(sets.back().fps, g.threads);
      std::cerr << s.name << ": intra mean " << format_fixed(stats.mean, 4)
                << " +/- " << format_fixed(stats.std, 4) << " over "
                << stats.pairs << " pairs\n";
    }
  }
  emit(output, similarity_matrix_to_csv(
                   inter_dataset_similarity_matrix(sets, g.threads)));
  return 0;
}

int cmd_curate(const std::string &output_dir, const Globals &g) {
  if (g.config.empty())
    throw UsageError("curate needs --config");
  ResolverConfig rc;
  CurationConfig cc;
  try {
    cc = load_curation_config(g.config, &rc);
  } catch (const CurationError &e) {
    throw UsageError(e.what());
  }
  if (g.offline)
    rc.offline = true;
  if (!output_dir.empty())
    cc.output_dir = output_dir;
  PubChemResolver resolver(rc);
  const CurationResult res = run_curation(cc, resolver);
  write_curation_outputs(res, cc);
  std::cout << curation_stats_json(res.stats, cc.threshold);
  return 0;
}

int cmd_resolve(const std::vector<std::string> &cas_numbers,
                const std::string &cache, const std::string &mapping,
                const std::string &base_url, int rate_ms, const Globals &g) {
  if (cas_numbers.empty())
    throw UsageError("resolve needs at least one CAS number");
  ResolverConfig rc;
  rc.cache_path = cache;
  rc.mapping_path = mapping;
  if (!base_url.empty())
    rc.base_url = base_url;
  rc.offline = g.offline;
  rc.min_interval = std::chrono::milliseconds(rate_ms);
  PubChemResolver resolver(rc);
  int failures = 0;
  std::cout << "cas,status,smiles\n";
  for (const auto &cas: cas_numbers) {
    const ResolveResult r = resolver.resolve(cas);
    const char *status = r.status == ResolveStatus::kFound      ? "found"
                         : r.status == ResolveStatus::kNotFound ? "not_found"
                                                                : "network_error";
    std::cout << csv_join({ cas, status, r.smiles }) << "\n";
    if (r.status != ResolveStatus::kFound) {
      std::cerr << cas << ": " << r.detail << "\n";
      ++failures;
    }
  }
  return failures ? kDataError : 0;
}

int cmd_bench(const Globals &g, bool seed_set, bool threads_set) {
  if (g.config.empty())
    throw UsageError("bench needs --config");
  BenchmarkConfig config;
  try {
    config = load_benchmark_config(g.config);
  } catch (const ConfigError &e) {
    throw UsageError(g.config + ": " + e.what());
  }
  if (seed_set)
    config.seed = g.seed;
  if (threads_set)
    config.threads = g.threads;
  const BenchmarkResult res = run_benchmark(config);
  std::cout << report_text(res);
  std::cout << "wrote " << res.run_dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app { "pestgraph: molecular graph featurization, splitting, "
                 "curation and benchmarking" };
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<cli::JsonConfig>());
  app.allow_config_extras(CLI::config_extras_mode::ignore_all);
  // parse/canon take raw SMILES from remaining() so CLI11 does not read
  // "[Na+].[Cl-]" as a list; stray arguments are rejected after parsing.
  app.allow_extras();

  Globals g;
  auto *seed_opt = app.add_option("--seed", g.seed, "Random seed");
  auto *threads_opt =
      app.add_option("--threads", g.threads, "Worker threads")
          ->check(CLI::PositiveNumber);
  app.add_flag("--offline", g.offline, "Never touch the network");
  app.set_config("--config", "", "JSON config file")->check(CLI::ExistingFile);

  std::string file;

  auto *parse = app.add_subcommand("parse", "Parse SMILES and report graphs");
  parse->allow_extras();
  parse->add_option("-i,--input", file, "SMILES file, one per line");

  auto *canon = app.add_subcommand("canon", "Print canonical SMILES");
  canon->allow_extras();
  canon->add_option("-i,--input", file, "SMILES file, one per line");

  FingerprintOptions fo;
  auto *fp = app.add_subcommand("fingerprint", "Compute fingerprints");
  fp->add_option("-i,--input", fo.input, "Dataset (CSV or .smi)");
  fp->add_option("-o,--output", fo.output, "Output file (default stdout)");
  fp->add_option("--scheme", fo.scheme)
      ->check(CLI::IsMember({ "ecfp", "atompairs", "torsion", "path",
                              "atom_counts" }));
  fp->add_option("--radius", fo.radius);
  fp->add_option("--bits", fo.bits, "Folded length, 0 for unfolded");
  fp->add_option("--min-len", fo.min_len);
  fp->add_option("--max-len", fo.max_len);
  fp->add_flag("--counts", fo.counts, "Counted ECFP");
  fp->add_flag("--dense", fo.dense, "Hex bitstring output");
  fp->add_option("--format", fo.format)->check(CLI::IsMember({ "csv", "json" }));

  KernelOptions ko;
  auto *kernel = app.add_subcommand("kernel", "Compute a graph kernel matrix");
  kernel->add_option("-i,--input", ko.input, "Dataset (CSV or .smi)");
  kernel->add_option("-o,--output", ko.output);
  kernel->add_option("--type", ko.type, "wl, wloa, sp, propagation");
  kernel->add_option("--iterations", ko.h, "WL iterations h");
  kernel->add_option("--t-max", ko.t_max);
  kernel->add_option("--bin-width", ko.bin_width);
  kernel->add_flag("--raw", ko.raw, "Skip cosine normalization");

  std::string f_input, f_output, f_type = "ltp";
  int bins = 10;
  auto *features = app.add_subcommand("features", "LTP / MOLTOP descriptors");
  features->add_option("-i,--input", f_input);
  features->add_option("-o,--output", f_output);
  features->add_option("--type", f_type, "ltp or moltop");
  features->add_option("--bins", bins)->check(CLI::Range(2, 1000));

  std::string s_input, s_method = "maxmin", s_output;
  double fraction = 0.2;
  auto *split = app.add_subcommand("split", "Train/test split");
  split->add_option("-i,--input", s_input);
  split->add_option("--method", s_method, "maxmin, time or random");
  split->add_option("--fraction", fraction, "Test fraction");
  split->add_option("-o,--output", s_output,
                    "CSV path; a .json sidecar is written next to it");

  std::vector<std::string> d_inputs;
  std::string d_output;
  auto *diversity = app.add_subcommand("diversity", "Tanimoto similarity matrix");
  diversity->add_option("datasets", d_inputs, "Dataset files");
  diversity->add_option("-o,--output", d_output);

  std::string c_output;
  auto *curate = app.add_subcommand("curate", "Run the curation pipeline");
  curate->add_option("-o,--output-dir", c_output,
                     "Overrides the config's output_dir");

  std::vector<std::string> cas_numbers;
  std::string cache, mapping, base_url;
  int rate_ms = 200;
  auto *resolve = app.add_subcommand("resolve", "Resolve CAS numbers to SMILES");
  resolve->add_option("cas", cas_numbers, "CAS numbers");
  resolve->add_option("--cache", cache, "JSON-lines cache file");
  resolve->add_option("--mapping", mapping, "Offline mapping file");
  resolve->add_option("--base-url", base_url);
  resolve->add_option("--rate-limit-ms", rate_ms);

  auto *bench = app.add_subcommand("bench", "Run a benchmark config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n"
              << "run with --help for usage\n";
    return kUsageError;
  }
  const std::vector<std::string> extras = app.remaining();
  const bool takes_smiles = *parse || *canon;
  for (const auto &e: extras)
    if (!takes_smiles || (e.size() > 1 && e[0] == '-')) {
      std::cerr << "error: unexpected argument '" << e << "'\n"
                << "run with --help for usage\n";
      return kUsageError;
    }
  if (auto *cfg = app.get_config_ptr(); cfg && cfg->count() > 0)
    g.config = cfg->as<std::string>();

  try {
    if (*parse)
      return cmd_parse(extras, file);
    if (*canon)
      return cmd_canon(extras, file);
    if (*fp)
      return cmd_fingerprint(fo, g);
    if (*kernel)
      return cmd_kernel(ko, g);
    if (*features)
      return cmd_features(f_input, f_output, f_type, bins, g);
    if (*split)
      return cmd_split(s_input, s_method, fraction, s_output, g);
    if (*diversity)
      return cmd_diversity(d_inputs, d_output, g);
    if (*curate)
      return cmd_curate(c_output, g);
    if (*resolve)
      return cmd_resolve(cas_numbers, cache, mapping, base_url, rate_ms, g);
    if (*bench)
      return cmd_bench(g, seed_opt->count() > 0, threads_opt->count() > 0);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}
