//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PESTGRAPH_TOOLS_JSON_CONFIG_H_
#define PESTGRAPH_TOOLS_JSON_CONFIG_H_

#include <istream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace pestgraph::cli {

// Lets CLI11 read option defaults from a JSON file. Top-level scalars map to
// global options, objects named after a subcommand to that subcommand's
// options. Anything else (e.g. the benchmark's "methods" array) is ignored
// here and consumed by the subcommand itself.
class JsonConfig: public CLI::Config {
public:
  std::string to_config(const CLI::App *, bool, bool,
                        std::string) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream &in) const override {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception &e) {
      throw CLI::ConversionError(std::string("invalid JSON config: ") +
                                 e.what());
    }
    std::vector<CLI::ConfigItem> items;
    if (j.is_object())
      walk(j, {}, items);
    return items;
  }

private:
  static std::string scalar(const nlohmann::json &v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  static void walk(const nlohmann::json &obj,
                   const std::vector<std::string> &parents,
                   std::vector<CLI::ConfigItem> &items) {
    for (const auto &[key, value]: obj.items()) {
      if (value.is_object()) {
        if (parents.empty()) {
          auto p = parents;
          p.push_back(key);
          walk(value, p, items);
        }
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        bool scalars = true;
        for (const auto &v: value)
          scalars = scalars && v.is_primitive();
        if (!scalars)
          continue;
        for (const auto &v: value)
          item.inputs.push_back(scalar(v));
      } else if (!value.is_null()) {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
  }
};

}  // namespace pestgraph::cli

#endif  // PESTGRAPH_TOOLS_JSON_CONFIG_H_
