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

#ifndef STTX_DK_ENCODE_HPP
#define STTX_DK_ENCODE_HPP

#include <set>
#include <string>
#include <vector>

#include "sttx/core/signature.hpp"
#include "sttx/dk/ast.hpp"
#include "sttx/kernel/proof.hpp"
#include "sttx/kernel/theory.hpp"

namespace sttx::dk {

// Bound names avoid `reserved` (the theory's global names) and never shadow.
// Monotypes are written `term (p A)`; the body of forallKtype is the bare
// monotype.

DkTerm encode_mono(const core::MonoType& a, const std::vector<std::string>& binder_names = {});
DkTerm encode_type(const core::PolyType& t, const std::set<std::string>& reserved = {});
// Definition body, type binders as lambdas over `type`.
DkTerm encode_term(const core::PolyTerm& t, const std::set<std::string>& reserved = {});
// Argument of `proof`.
DkTerm encode_prop(const core::PolyTerm& t, const std::set<std::string>& reserved = {});
// Closed proof; Conv nodes are erased.
DkTerm encode_proof(const kernel::ProofTerm& p, const std::set<std::string>& reserved = {});

std::vector<DkEntry> encode(const kernel::Theory& th);

}  // namespace sttx::dk

#endif  // STTX_DK_ENCODE_HPP
