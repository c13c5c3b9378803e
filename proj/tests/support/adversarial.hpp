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

#ifndef STTX_TESTS_SUPPORT_ADVERSARIAL_HPP
#define STTX_TESTS_SUPPORT_ADVERSARIAL_HPP

#include <string>
#include <vector>

#include "sttx/core/signature.hpp"
#include "sttx/kernel/proof.hpp"
#include "sttx/kernel/typing.hpp"

namespace sttx::testing {

// Malformed or bogus proofs of the unprovable !x:Prop. x, each with the
// error kind the kernel must raise.
struct AdversarialItem {
  std::string name;
  kernel::ProofTerm proof;
  kernel::KernelErrc expected;
};

core::PolyTerm false_statement();
core::Signature adversarial_sig();
// imp_refl : !q:Prop. q => q, refl : forall X. !x:X. leibniz X x x, top_true : top.
kernel::FactTable adversarial_facts();
std::vector<AdversarialItem> adversarial_corpus();

struct AdversarialOutcome {
  std::string name;
  bool accepted = false;
  bool kind_ok = false;
  std::string error;
};

std::vector<AdversarialOutcome> run_adversarial();

}  // namespace sttx::testing

#endif  // STTX_TESTS_SUPPORT_ADVERSARIAL_HPP
