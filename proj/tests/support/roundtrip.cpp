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

#include "support/roundtrip.hpp"

#include "support/theory_gen.hpp"
#include "sttx/dk/decode.hpp"
#include "sttx/dk/encode.hpp"

namespace sttx::testing {

std::string file_round_trip(const std::string& text) {
  auto parsed = dk::parse_dk(text);
  kernel::Theory th = dk::decode_theory(parsed);
  auto encoded = dk::encode(th);
  if (encoded.size() != parsed.size()) {
    return std::to_string(encoded.size()) + " entries encoded, " + std::to_string(parsed.size()) + " parsed";
  }
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const auto& a = encoded[i];
    const auto& b = parsed[i];
    if (a.name != b.name) return "entry " + a.name + " vs " + b.name;
    if (!dk::alpha_eq(a.type, b.type)) return b.name + ": type " + dk::to_string(a.type) + " vs " + dk::to_string(b.type);
    if (a.body.has_value() != b.body.has_value()) return b.name + ": body presence differs";
    if (b.body && !dk::alpha_eq(*a.body, *b.body)) {
      return b.name + ": body " + dk::to_string(*a.body) + " vs " + dk::to_string(*b.body);
    }
  }
  return {};
}

std::string theory_round_trip(const kernel::Theory& th) {
  std::string text = dk::print_entries(dk::encode(th));
  return compare_theories(th, dk::load_theory(text));
}

}  // namespace sttx::testing
