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

#ifndef STTX_KERNEL_TYPING_HPP
#define STTX_KERNEL_TYPING_HPP

#include <string>
#include <string_view>

#include "sttx/core/signature.hpp"
#include "sttx/core/term.hpp"
#include "sttx/core/type.hpp"
#include "sttx/error.hpp"

namespace sttx::kernel {

enum class KernelErrc {
  UnboundVariable,
  UnboundConstant,
  TypeMismatch,
  NotAFunction,
  NotAProposition,
  ArityError,
  IllFormedType,
  IllFormedContext,
  HypNotFound,
  RuleMismatch,
  SideConditionViolated,
  ConvFailed,
  UnknownFact,
};

std::string_view to_string(KernelErrc e);

// Positions are term positions for typing errors and proof-tree paths
// (child indices of ProofTerm nodes) for proof errors.
class KernelError : public Error<KernelErrc> {
 public:
  KernelError(KernelErrc kind, const std::string& message, core::Position position = {})
      : Error<KernelErrc>(kind, message + (position.empty() ? "" : " at " + core::to_string(position))),
        position_(std::move(position)) {}

  const core::Position& position() const noexcept { return position_; }

 private:
  core::Position position_;
};

// Well-formedness. Bound type levels below `bound_levels` count as in scope.
bool wf_monotype(const core::Signature& sig, const core::TypingContext& ctx, const core::MonoType& a,
                 std::uint32_t bound_levels = 0);
bool wf_polytype(const core::Signature& sig, const core::TypingContext& ctx, const core::PolyType& t);
bool wf_context(const core::Signature& sig, const core::TypingContext& ctx);
bool wf_signature(const core::Signature& sig);
// As wf_signature, reporting the first offending entry.
void check_signature(const core::Signature& sig);

// Checks `body : type` for a constant definition.
void check_definition(const core::Signature& sig, const core::CstDefn& defn);

// The type of a polyterm. Binders over a proposition form a proposition;
// binders over anything else form a type abstraction. A constant may be
// partially applied to its type arguments only as the whole body.
core::PolyType infer_type(const core::Signature& sig, const core::TypingContext& ctx, const core::PolyTerm& t);
core::MonoType infer_mono(const core::Signature& sig, const core::TypingContext& ctx, const core::Term& t);

// Throws NotAProposition unless `t : Prop`.
void check_proposition(const core::Signature& sig, const core::TypingContext& ctx, const core::PolyTerm& t);

}  // namespace sttx::kernel

#endif  // STTX_KERNEL_TYPING_HPP
