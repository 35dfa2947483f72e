//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/resolver.h"

#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace pestgraph {
namespace {

std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm {};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string jsonl_entry(const std::string &cas, const std::string &smiles) {
  nlohmann::ordered_json j;
  j["cas"] = cas;
  j["smiles"] = smiles;
  j["timestamp"] = utc_timestamp();
  return j.dump();
}

}  // namespace

ResolveResult MapResolver::resolve(const std::string &cas) {
  auto it = mapping_.find(cas);
  if (it == mapping_.end())
    return { ResolveStatus::kNotFound, "", "not in mapping", false };
  return { ResolveStatus::kFound, it->second, "", true };
}

std::map<std::string, std::string> read_cas_jsonl(
    const std::filesystem::path &path, std::size_t *corrupt) {
  std::map<std::string, std::string> out;
  if (corrupt)
    *corrupt = 0;
  std::ifstream in(path);
  if (!in)
    return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      const auto j = nlohmann::json::parse(line);
      out[j.at("cas").get<std::string>()] = j.at("smiles").get<std::string>();
    } catch (const std::exception &) {
      if (corrupt)
        ++*corrupt;
    }
  }
  return out;
}

std::string smiles_from_property_json(const std::string &body) {
  const auto j = nlohmann::json::parse(body, nullptr, false);
  if (j.is_discarded())
    return {};
  const auto table = j.find("PropertyTable");
  if (table == j.end())
    return {};
  const auto props = table->find("Properties");
  if (props == table->end() || !props->is_array() || props->empty())
    return {};
  const auto &first = (*props)[0];
  for (const char *key: { "CanonicalSMILES", "ConnectivitySMILES",
                          "IsomericSMILES", "SMILES" }) {
    auto it = first.find(key);
    if (it != first.end() && it->is_string())
      return it->get<std::string>();
  }
  return {};
}

PubChemResolver::PubChemResolver(ResolverConfig config)
    : config_(std::move(config)) {
  if (!config_.mapping_path.empty()) {
    if (!std::filesystem::exists(config_.mapping_path))
      throw std::runtime_error("mapping file '" +
                               config_.mapping_path.string() + "' not found");
    mapping_ = read_cas_jsonl(config_.mapping_path);
  }
  if (!config_.cache_path.empty()) {
    std::size_t corrupt = 0;
    cache_ = read_cas_jsonl(config_.cache_path, &corrupt);
    if (corrupt > 0) {
      // Rebuild from the entries that survived.
      std::ofstream out(config_.cache_path, std::ios::trunc);
      for (const auto &[cas, smiles]: cache_)
        out << jsonl_entry(cas, smiles) << "\n";
      cache_rebuilt_ = true;
    }
  }
}

void PubChemResolver::remember(const std::string &cas,
                               const std::string &smiles) {
  cache_[cas] = smiles;
  if (config_.cache_path.empty())
    return;
  if (config_.cache_path.has_parent_path())
    std::filesystem::create_directories(config_.cache_path.parent_path());
  std::ofstream out(config_.cache_path, std::ios::app);
  out << jsonl_entry(cas, smiles) << "\n";
}

PubChemResolver::Response PubChemResolver::get(const std::string &path) {
  if (config_.min_interval.count() > 0 &&
      last_request_ != std::chrono::steady_clock::time_point {}) {
    const auto wait =
        last_request_ + config_.min_interval - std::chrono::steady_clock::now();
    if (wait.count() > 0)
      std::this_thread::sleep_for(wait);
  }
  last_request_ = std::chrono::steady_clock::now();
  ++requests_;

  httplib::Client client(config_.base_url);
  client.set_connection_timeout(config_.timeout_seconds, 0);
  client.set_read_timeout(config_.timeout_seconds, 0);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res)
    return { 0, "", httplib::to_string(res.error()) };
  return { res->status, res->body, "" };
}

PubChemResolver::Response PubChemResolver::get_with_retry(
    const std::string &path) {
  auto delay = config_.backoff;
  Response r;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    r = get(path);
    // Retry transport failures, throttling and server errors only.
    const bool transient = r.status == 0 || r.status == 429 || r.status >= 500;
    if (!transient)
      return r;
    if (attempt < config_.max_retries) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
  }
  return r;
}

ResolveResult PubChemResolver::resolve(const std::string &cas) {
  if (auto it = cache_.find(cas); it != cache_.end())
    return { ResolveStatus::kFound, it->second, "", true };
  if (auto it = mapping_.find(cas); it != mapping_.end())
    return { ResolveStatus::kFound, it->second, "", true };
  if (config_.offline)
    return { ResolveStatus::kNotFound, "", "not cached (offline mode)", false };

  const auto fail = [](const Response &r, const std::string &what) {
    if (r.status == 404 || (r.status >= 400 && r.status < 500 && r.status != 429))
      return ResolveResult { ResolveStatus::kNotFound, "",
                             what + ": HTTP " + std::to_string(r.status), false };
    return ResolveResult { ResolveStatus::kNetworkError, "",
                           what + ": " + (r.status ? "HTTP " +
                                          std::to_string(r.status) : r.error),
                           false };
  };

  const Response ids = get_with_retry(
      "/rest/pug/compound/name/" + httplib::detail::encode_url(cas) +
      "/cids/JSON");
  if (ids.status != 200)
    return fail(ids, "cid lookup");
  const auto j = nlohmann::json::parse(ids.body, nullptr, false);
  long cid = -1;
  if (!j.is_discarded()) {
    const auto list = j.find("IdentifierList");
    if (list != j.end()) {
      const auto cids = list->find("CID");
      if (cids != list->end() && cids->is_array() && !cids->empty() &&
          (*cids)[0].is_number_integer())
        cid = (*cids)[0].get<long>();
    }
  }
  if (cid <= 0)
    return { ResolveStatus::kNotFound, "", "no compound id in response", false };

  const Response prop = get_with_retry("/rest/pug/compound/cid/" +
                                       std::to_string(cid) +
                                       "/property/CanonicalSMILES/JSON");
  if (prop.status != 200)
    return fail(prop, "property lookup");
  const std::string smiles = smiles_from_property_json(prop.body);
  if (smiles.empty())
    return { ResolveStatus::kNotFound, "", "no SMILES in property response",
             false };
  remember(cas, smiles);
  return { ResolveStatus::kFound, smiles, "", false };
}

}  // namespace pestgraph
