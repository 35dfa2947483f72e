//
// pestgraph - Copyright 2026 The pestgraph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "pestgraph/cas.h"

#include <regex>

namespace pestgraph {

bool is_valid_cas(std::string_view cas) {
  static const std::regex pattern(R"(\d{2,7}-\d{2}-\d)");
  if (!std::regex_match(cas.begin(), cas.end(), pattern))
    return false;
  const int check = cas.back() - '0';
  int weight = 1, sum = 0;
  // Walk right to left, skipping the check digit and the dashes.
  for (auto i = static_cast<long>(cas.size()) - 3; i >= 0; --i) {
    if (cas[i] == '-')
      continue;
    sum += (cas[i] - '0') * weight++;
  }
  return sum % 10 == check;
}

std::string normalize_cas(std::string_view cas) {
  const auto b = cas.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  const auto e = cas.find_last_not_of(" \t\r\n");
  return std::string(cas.substr(b, e - b + 1));
}

}  // namespace pestgraph
