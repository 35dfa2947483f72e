//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_RESOLVER_H_
#define PESTGRAPH_RESOLVER_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>

namespace pestgraph {

enum class ResolveStatus { kFound, kNotFound, kNetworkError };

struct ResolveResult {
  ResolveStatus status = ResolveStatus::kNotFound;
  std::string smiles;
  std::string detail;  // reason for failures
  bool from_cache = false;
};

class CasResolver {
public:
  virtual ~CasResolver() = default;
  virtual ResolveResult resolve(const std::string &cas) = 0;
};

// Fixed in-memory mapping; anything else is not found.
class MapResolver: public CasResolver {
public:
  explicit MapResolver(std::map<std::string, std::string> mapping)
      : mapping_(std::move(mapping)) { }
  ResolveResult resolve(const std::string &cas) override;

private:
  std::map<std::string, std::string> mapping_;
};

// JSON-lines file of {"cas": ..., "smiles": ..., "timestamp": ...}. Later
// lines win. Lines that fail to parse are dropped and, when `corrupt` is
// given, counted there.
std::map<std::string, std::string> read_cas_jsonl(
    const std::filesystem::path &path, std::size_t *corrupt = nullptr);

struct ResolverConfig {
  std::string base_url = "https://pubchem.ncbi.nlm.nih.gov";
  std::filesystem::path cache_path;    // empty: no persistent cache
  std::filesystem::path mapping_path;  // optional user mapping, same format
  bool offline = false;
  int max_retries = 3;
  std::chrono::milliseconds backoff { 500 };  // doubled per retry
  std::chrono::milliseconds min_interval { 200 };  // between requests
  int timeout_seconds = 10;
};

// PubChem PUG-REST client: name -> CIDs, then the first CID's SMILES
// property. Results are written through to the on-disk cache. Offline mode
// consults only the cache and the mapping file. A cache file with unreadable
// lines is rewritten from the readable entries.
class PubChemResolver: public CasResolver {
public:
  explicit PubChemResolver(ResolverConfig config);

  ResolveResult resolve(const std::string &cas) override;

  std::size_t network_requests() const { return requests_; }
  std::size_t cache_size() const { return cache_.size(); }
  bool cache_rebuilt() const { return cache_rebuilt_; }

private:
  struct Response {
    int status = 0;  // 0: transport failure
    std::string body;
    std::string error;
  };

  Response get(const std::string &path);
  Response get_with_retry(const std::string &path);
  void remember(const std::string &cas, const std::string &smiles);

  ResolverConfig config_;
  std::map<std::string, std::string> cache_;
  std::map<std::string, std::string> mapping_;
  std::size_t requests_ = 0;
  bool cache_rebuilt_ = false;
  std::chrono::steady_clock::time_point last_request_ {};
};

// Extracts the SMILES from a PUG-REST property response; accepts the
// CanonicalSMILES, IsomericSMILES, SMILES and ConnectivitySMILES keys.
// Returns empty when absent.
std::string smiles_from_property_json(const std::string &body);

}  // namespace pestgraph

#endif  // PESTGRAPH_RESOLVER_H_
