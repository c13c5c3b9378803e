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

#ifndef STTX_KERNEL_PROOF_HPP
#define STTX_KERNEL_PROOF_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sttx/core/rewrite.hpp"
#include "sttx/core/signature.hpp"
#include "sttx/core/term.hpp"
#include "sttx/kernel/typing.hpp"

namespace sttx::kernel {

// Natural deduction proof trees. Rules:
//   Assume(p)            S ASSUME, p in the hypotheses
//   ImpIntro(p, b)       S =>I, discharging p
//   ImpElim(f, a)        modus ponens
//   ForallIntro(x, A, b) S forall-I, x not free in the hypotheses
//   ForallElim(b, t)     S forall-E at term level
//   TyForallIntro(X, b)  type generalization, X not free in context or hypotheses
//   TyForallElim(b, A)   S forall-E at type level
//   Conv(b, target)      S CONV
//   Ref(name)            a previously established axiom or theorem
// The checker returns an elaborated copy in which every node records its
// conclusion and every implicit conversion is an explicit Conv node.
class ProofTerm {
 public:
  enum class Kind : std::uint8_t {
    Assume,
    ImpIntro,
    ImpElim,
    ForallIntro,
    ForallElim,
    TyForallIntro,
    TyForallElim,
    Conv,
    Ref,
  };

  ProofTerm() = default;

  static ProofTerm assume(core::Term prop);
  static ProofTerm imp_intro(core::Term hyp, ProofTerm body);
  static ProofTerm imp_elim(ProofTerm fn, ProofTerm arg);
  static ProofTerm forall_intro(std::string var, core::MonoType annot, ProofTerm body);
  static ProofTerm forall_elim(ProofTerm body, core::Term witness);
  static ProofTerm ty_forall_intro(std::string tyvar, ProofTerm body);
  static ProofTerm ty_forall_elim(ProofTerm body, core::MonoType witness);
  static ProofTerm conv(ProofTerm body, core::PolyTerm target);
  static ProofTerm ref(std::string name);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  // Assume / ImpIntro proposition, ForallElim witness.
  const core::Term& term() const;
  // Conv target.
  const core::PolyTerm& target() const;
  // ForallIntro / TyForallIntro variable, Ref name.
  const std::string& name() const;
  // ForallIntro annotation, TyForallElim witness.
  const core::MonoType& type() const;
  // ImpIntro/ForallIntro/ForallElim/TyForall*/Conv body, ImpElim function.
  const ProofTerm& body() const;
  const ProofTerm& arg() const;  // ImpElim only

  std::size_t num_children() const;
  const ProofTerm& child(std::size_t i) const;

  // Set on elaborated trees only.
  const core::PolyTerm* conclusion() const;
  ProofTerm with_conclusion(core::PolyTerm concl) const;

  std::size_t size() const;

 private:
  struct Node;
  explicit ProofTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

const char* rule_name(ProofTerm::Kind k);

// Statements of earlier axioms and theorems, for Ref.
using FactTable = std::map<std::string, core::PolyTerm>;

struct Theorem {
  std::vector<std::string> tyvars;
  core::TypingContext ctx;
  std::vector<core::Term> hyps;
  core::PolyTerm concl;
  ProofTerm proof;  // elaborated
};

Theorem check_proof(const core::Signature& sig, const core::TypingContext& ctx, const std::vector<core::Term>& hyps,
                    const ProofTerm& p, const core::PolyTerm& goal, const FactTable* facts = nullptr,
                    std::size_t fuel = core::kDefaultFuel);

// Erases every Conv node; used to compare proofs modulo conversion.
ProofTerm erase_conv(const ProofTerm& p);
bool same_modulo_conv(const ProofTerm& a, const ProofTerm& b);

std::string to_string(const ProofTerm& p);

}  // namespace sttx::kernel

#endif  // STTX_KERNEL_PROOF_HPP
