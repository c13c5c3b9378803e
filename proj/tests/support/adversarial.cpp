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

#include "support/adversarial.hpp"

#include "support/fixtures.hpp"

namespace sttx::testing {

using kernel::KernelErrc;
using kernel::ProofTerm;

core::PolyTerm false_statement() { return Term::all("x", prop(), fv("x")); }

core::Signature adversarial_sig() { return mini_nat_sig(); }

kernel::FactTable adversarial_facts() {
  return {
      {"imp_refl", Term::all("q", prop(), Term::imp(fv("q"), fv("q")))},
      {"refl", refl_statement()},
      {"top_true", cst("top")},
  };
}

std::vector<AdversarialItem> adversarial_corpus() {
  const Term f = false_statement().body;
  const Term x = fv("x");
  const ProofTerm imp_refl = ProofTerm::ref("imp_refl");
  auto all_x = [](ProofTerm body) { return ProofTerm::forall_intro("x", prop(), std::move(body)); };
  return {
      {"assume_goal", ProofTerm::assume(f), KernelErrc::HypNotFound},
      {"assume_under_binder", all_x(ProofTerm::assume(x)), KernelErrc::HypNotFound},
      {"identity_instead", ProofTerm::imp_intro(f, ProofTerm::assume(f)), KernelErrc::RuleMismatch},
      {"unknown_fact", ProofTerm::ref("ex_falso"), KernelErrc::UnknownFact},
      {"self_reference", ProofTerm::ref("bogus"), KernelErrc::UnknownFact},
      {"modus_ponens_on_assumption",
       ProofTerm::imp_elim(ProofTerm::forall_elim(imp_refl, f), ProofTerm::assume(f)), KernelErrc::HypNotFound},
      {"wrong_binder_type",
       ProofTerm::forall_intro("x", nat(), ProofTerm::forall_elim(ProofTerm::ty_forall_elim(ProofTerm::ref("refl"), nat()), x)),
       KernelErrc::RuleMismatch},
      {"ill_typed_witness", ProofTerm::forall_elim(imp_refl, cst("O")), KernelErrc::TypeMismatch},
      {"non_function_witness", ProofTerm::forall_elim(imp_refl, ap(cst("O"), cst("O"))), KernelErrc::NotAFunction},
      {"unbound_witness", ProofTerm::forall_elim(imp_refl, fv("y")), KernelErrc::UnboundVariable},
      {"unknown_constant_witness", ProofTerm::forall_elim(imp_refl, cst("absurd")), KernelErrc::UnboundConstant},
      {"missing_type_arguments", ProofTerm::forall_elim(imp_refl, ap(cst("id"), cst("O"))),
       KernelErrc::ArityError},
      {"bogus_conversion", ProofTerm::conv(imp_refl, false_statement()), KernelErrc::ConvFailed},
      {"delta_is_not_enough", ProofTerm::conv(ProofTerm::ref("top_true"), false_statement()),
       KernelErrc::ConvFailed},
      {"type_instance_of_monomorphic_fact", ProofTerm::ty_forall_elim(imp_refl, prop()), KernelErrc::RuleMismatch},
      {"type_generalization_of_goal", ProofTerm::ty_forall_intro("X", all_x(ProofTerm::forall_elim(imp_refl, x))),
       KernelErrc::RuleMismatch},
      {"ill_formed_type_instance",
       ProofTerm::forall_elim(ProofTerm::ty_forall_elim(ProofTerm::ref("refl"), MonoType::op("void")), x),
       KernelErrc::IllFormedType},
      {"eliminating_a_forall_as_implication", ProofTerm::imp_elim(imp_refl, imp_refl), KernelErrc::RuleMismatch},
      {"hypothesis_not_a_proposition", ProofTerm::imp_intro(cst("O"), ProofTerm::assume(cst("O"))),
       KernelErrc::NotAProposition},
      {"rebinding_a_bound_variable", all_x(all_x(ProofTerm::forall_elim(imp_refl, x))),
       KernelErrc::SideConditionViolated},
  };
}

std::vector<AdversarialOutcome> run_adversarial() {
  core::Signature sig = adversarial_sig();
  kernel::FactTable facts = adversarial_facts();
  std::vector<AdversarialOutcome> out;
  for (const auto& item : adversarial_corpus()) {
    AdversarialOutcome o{item.name, false, false, {}};
    try {
      kernel::check_proof(sig, {}, {}, item.proof, false_statement(), &facts);
      o.accepted = true;
    } catch (const kernel::KernelError& e) {
      o.kind_ok = e.kind() == item.expected;
      o.error = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace sttx::testing
