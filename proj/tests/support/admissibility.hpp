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

#ifndef STTX_TESTS_SUPPORT_ADMISSIBILITY_HPP
#define STTX_TESTS_SUPPORT_ADMISSIBILITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sttx/ot/export.hpp"

namespace sttx::testing {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::string first_failure;

  bool ok() const { return total > 0 && passed == total; }
};

// Writes `th` (after the exporter's definitions) as a one-theorem article,
// runs it through the article checker and compares the exported sequent with
// `want`: same conclusion up to alpha, hypotheses among those of `want`.
// Returns an empty string on success.
std::string verify_in_checker(const ot::exporter::Exporter& ex, const ot::exporter::Thm& th,
                              const ot::Sequent& want);

// One suite per kernel rule template (Assume, ImpIntro, ImpElim, ForallIntro,
// ForallElim, Conv, TyForallElim), `n` random instances each.
std::vector<SuiteResult> rule_template_suites(std::uint64_t seed, int n);

// One suite per context shape: hole, C u, t C, \x.C, !X.C, C => u, t => C,
// !x:A.C, `n` random instances each.
std::vector<SuiteResult> congruence_suites(std::uint64_t seed, int n);

// Random terms of size at most `max_size` over the mini-nat signature: the
// equation built from the normalization trace verifies and its right side is
// the translation of the innermost normal form.
SuiteResult conversion_oracle_suite(std::uint64_t seed, int n, std::size_t max_size);

}  // namespace sttx::testing

#endif  // STTX_TESTS_SUPPORT_ADMISSIBILITY_HPP
