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

#ifndef STTX_DK_DECODE_HPP
#define STTX_DK_DECODE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sttx/core/rewrite.hpp"
#include "sttx/core/signature.hpp"
#include "sttx/dk/ast.hpp"
#include "sttx/kernel/proof.hpp"
#include "sttx/kernel/theory.hpp"

namespace sttx::dk {

// The coercion `p` is optional wherever the encoding expects it: `term A`
// and `term (p A)` decode alike, as do `forallKtype (\X : type => A)` and
// `forallKtype (\X : type => p A)`.

// `d` is the type of a constant: term (p A) or term (forallKtype ...).
core::PolyType decode_type(const DkTerm& d, const core::Signature& sig);

// Definition body; leading lambdas over `type` become the type binders.
// The result is checked against `expected`.
core::PolyTerm decode_term(const DkTerm& d, const core::PolyType& expected, const core::Signature& sig);

// `d` is the argument of `proof`; forallKprop chains become the binders.
core::PolyTerm decode_prop(const DkTerm& d, const core::Signature& sig);

// Decodes a proof of `goal` and checks it with the kernel; conversions the
// encoding performs silently come back as explicit Conv nodes.
kernel::ProofTerm decode_proof(const DkTerm& d, const core::PolyTerm& goal, const core::Signature& sig,
                               const kernel::FactTable* facts = nullptr,
                               std::size_t fuel = core::kDefaultFuel);

struct EntryReport {
  std::string name;
  int line = 0;
  std::string kind;  // type operator, constant, definition, axiom, theorem
  bool ok = false;
  std::string error;
};

// Decodes entries in order into a checked theory. With a report, failing
// entries are logged and skipped; without one the first failure throws.
kernel::Theory decode_theory(const std::vector<DkEntry>& entries, std::vector<EntryReport>* report = nullptr,
                             std::size_t fuel = core::kDefaultFuel);

kernel::Theory load_theory(std::string_view text, std::vector<EntryReport>* report = nullptr,
                           std::size_t fuel = core::kDefaultFuel);

}  // namespace sttx::dk

#endif  // STTX_DK_DECODE_HPP
