/* Copyright 2026 The sttx Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef STTX_SRC_CORE_NAMES_HPP
#define STTX_SRC_CORE_NAMES_HPP

#include <set>
#include <string>
#include <vector>

namespace sttx::core::detail {

// Primes `hint` until it is not in `used`, then records it.
inline std::string fresh_name(std::string hint, std::set<std::string>& used, const char* fallback) {
  if (hint.empty()) hint = fallback;
  while (used.count(hint)) hint += '\'';
  used.insert(hint);
  return hint;
}

inline std::vector<std::string> fresh_names(const std::vector<std::string>& hints, std::set<std::string>& used,
                                            const char* fallback) {
  std::vector<std::string> out;
  out.reserve(hints.size());
  for (const auto& h : hints) out.push_back(fresh_name(h, used, fallback));
  return out;
}

}  // namespace sttx::core::detail

#endif  // STTX_SRC_CORE_NAMES_HPP
