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

#include <gtest/gtest.h>

#include "support/adversarial.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "sttx/kernel/proof.hpp"
#include "sttx/kernel/theory.hpp"
#include "sttx/kernel/typing.hpp"

namespace sttx {
namespace {

using namespace sttx::testing;
using core::TypingContext;
using kernel::KernelErrc;
using kernel::KernelError;
using kernel::ProofTerm;

template <class F>
KernelErrc error_of(F&& f) {
  try {
    f();
  } catch (const KernelError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no kernel error";
  return KernelErrc::UnknownFact;
}

ProofTerm refl_proof() {
  Term px = ap(fv("P"), fv("x"));
  return ProofTerm::ty_forall_intro(
      "X", ProofTerm::forall_intro(
               "x", tv("X"),
               ProofTerm::conv(ProofTerm::forall_intro("P", arr(tv("X"), prop()),
                                                       ProofTerm::imp_intro(px, ProofTerm::assume(px))),
                               ap(cst("leibniz", {tv("X")}), fv("x"), fv("x")))));
}

TEST(WellFormedness, MonoTypes) {
  core::Signature sig;
  sig.add_type_op("list", 1);
  TypingContext ctx;
  ctx.push_type("X");
  EXPECT_TRUE(kernel::wf_monotype(sig, ctx, arr(tv("X"), prop())));
  EXPECT_TRUE(kernel::wf_monotype(sig, ctx, MonoType::op("list", {prop()})));
  EXPECT_FALSE(kernel::wf_monotype(sig, ctx, MonoType::op("list", {prop(), prop()})));
  EXPECT_FALSE(kernel::wf_monotype(sig, ctx, tv("Y")));
  EXPECT_FALSE(kernel::wf_monotype(sig, ctx, nat()));
}

TEST(WellFormedness, PolyTypes) {
  core::Signature sig;
  EXPECT_TRUE(kernel::wf_polytype(sig, {}, PolyType({"X"}, arr(bv(0), arr(bv(0), prop())))));
  EXPECT_TRUE(kernel::wf_polytype(sig, {}, prop()));
  EXPECT_FALSE(kernel::wf_polytype(sig, {}, PolyType({"X", "X"}, bv(0))));
  EXPECT_FALSE(kernel::wf_polytype(sig, {}, PolyType({"X"}, bv(1))));
}

TEST(WellFormedness, Signatures) {
  core::Signature s1;
  s1.add_type_op("nat", 0);
  s1.declare("zero", nat());
  EXPECT_TRUE(kernel::wf_signature(s1));
  EXPECT_TRUE(kernel::wf_signature(leibniz_sig()));
  EXPECT_TRUE(kernel::wf_signature(mini_nat_sig()));
  core::Signature dup = s1;
  dup.declare("zero", nat());
  EXPECT_FALSE(kernel::wf_signature(dup));
  core::Signature bad;
  bad.define("c", prop(), Term::lam("x", prop(), fv("x")));
  EXPECT_FALSE(kernel::wf_signature(bad));
  EXPECT_EQ(error_of([&] { kernel::check_signature(bad); }), KernelErrc::TypeMismatch);
  core::Signature forward;
  forward.declare("zero", nat());
  forward.add_type_op("nat", 0);
  EXPECT_FALSE(kernel::wf_signature(forward));
}

TEST(InferType, ReflStatementIsAProposition) {
  EXPECT_EQ(kernel::infer_type(leibniz_sig(), {}, refl_statement()), PolyType(prop()));
}

TEST(InferType, Variable) {
  TypingContext ctx;
  ctx.push_type("A");
  ctx.push_term("x", tv("A"));
  EXPECT_EQ(kernel::infer_type(leibniz_sig(), ctx, fv("x")), PolyType(tv("A")));
}

TEST(InferType, ConstantInstance) {
  auto sig = mini_nat_sig();
  EXPECT_EQ(kernel::infer_type(sig, {}, cst("leibniz", {nat()})), PolyType(arr(nat(), arr(nat(), prop()))));
  EXPECT_EQ(kernel::infer_type(sig, {}, cst("leibniz")), PolyType({"X"}, arr(bv(0), arr(bv(0), prop()))));
  EXPECT_EQ(kernel::infer_type(sig, {}, cst("const", {nat()})), PolyType({"B"}, arr(nat(), arr(bv(0), nat()))));
}

TEST(InferType, TypeAbstraction) {
  auto sig = mini_nat_sig();
  PolyTerm t({"A"}, Term::lam("a", bv(0), fv("a")));
  EXPECT_EQ(kernel::infer_type(sig, {}, t), PolyType({"A"}, arr(bv(0), bv(0))));
}

TEST(InferType, Errors) {
  auto sig = mini_nat_sig();
  EXPECT_EQ(error_of([&] { kernel::infer_type(sig, {}, fv("x")); }), KernelErrc::UnboundVariable);
  EXPECT_EQ(error_of([&] { kernel::infer_type(sig, {}, cst("nope")); }), KernelErrc::UnboundConstant);
  EXPECT_EQ(error_of([&] { kernel::infer_type(sig, {}, ap(cst("S"), cst("top"))); }), KernelErrc::TypeMismatch);
  EXPECT_EQ(error_of([&] { kernel::infer_type(sig, {}, ap(cst("O"), cst("O"))); }), KernelErrc::NotAFunction);
  EXPECT_EQ(error_of([&] { kernel::infer_type(sig, {}, Term::imp(cst("O"), cst("top"))); }),
            KernelErrc::NotAProposition);
  EXPECT_EQ(error_of([&] { kernel::infer_type(sig, {}, Term::all("n", nat(), fv("n"))); }),
            KernelErrc::NotAProposition);
  EXPECT_EQ(error_of([&] { kernel::infer_type(sig, {}, cst("leibniz", {nat(), nat()})); }), KernelErrc::ArityError);
  EXPECT_EQ(error_of([&] { kernel::infer_type(sig, {}, cst("leibniz", {tv("Y")})); }), KernelErrc::ArityError);
  EXPECT_EQ(error_of([&] { kernel::infer_type(sig, {}, ap(cst("leibniz"), cst("O"))); }), KernelErrc::ArityError);
}

TEST(InferType, MismatchCarriesPosition) {
  auto sig = mini_nat_sig();
  try {
    kernel::infer_type(sig, {}, Term::imp(cst("top"), ap(cst("le"), cst("O"), cst("top"))));
    FAIL();
  } catch (const KernelError& e) {
    EXPECT_EQ(e.kind(), KernelErrc::TypeMismatch);
    EXPECT_EQ(e.position(), (core::Position{1, 1}));
  }
}

TEST(CheckProof, LeibnizReflexivity) {
  auto th = kernel::check_proof(leibniz_sig(), {}, {}, refl_proof(), refl_statement());
  EXPECT_EQ(th.concl, refl_statement());
  EXPECT_TRUE(th.hyps.empty());
  ASSERT_NE(th.proof.conclusion(), nullptr);
  EXPECT_EQ(*th.proof.conclusion(), refl_statement());
}

TEST(CheckProof, AssumeHypothesis) {
  core::Signature sig;
  TypingContext ctx;
  ctx.push_term("q", prop());
  auto th = kernel::check_proof(sig, ctx, {fv("q")}, ProofTerm::assume(fv("q")), fv("q"));
  EXPECT_EQ(th.concl, PolyTerm(fv("q")));
}

TEST(CheckProof, AssumeUpToConversion) {
  auto sig = mini_nat_sig();
  Term h = ap(Term::lam("p", prop(), fv("p")), cst("top"));
  auto th = kernel::check_proof(sig, {}, {h}, ProofTerm::assume(cst("top")), cst("top"));
  EXPECT_TRUE(th.proof.is(ProofTerm::Kind::Conv));
  EXPECT_EQ(th.proof.body().term(), h);
}

TEST(CheckProof, ImpElimMismatch) {
  core::Signature sig;
  TypingContext ctx;
  ctx.push_term("a", prop());
  ctx.push_term("b", prop());
  std::vector<Term> hyps{Term::imp(fv("a"), fv("b")), fv("b")};
  auto p = ProofTerm::imp_elim(ProofTerm::assume(hyps[0]), ProofTerm::assume(fv("b")));
  EXPECT_EQ(error_of([&] { kernel::check_proof(sig, ctx, hyps, p, fv("b")); }), KernelErrc::RuleMismatch);
}

TEST(CheckProof, ModusPonens) {
  core::Signature sig;
  TypingContext ctx;
  ctx.push_term("a", prop());
  ctx.push_term("b", prop());
  std::vector<Term> hyps{Term::imp(fv("a"), fv("b")), fv("a")};
  auto p = ProofTerm::imp_elim(ProofTerm::assume(hyps[0]), ProofTerm::assume(fv("a")));
  EXPECT_EQ(kernel::check_proof(sig, ctx, hyps, p, fv("b")).concl, PolyTerm(fv("b")));
}

TEST(CheckProof, Errors) {
  auto sig = mini_nat_sig();
  TypingContext ctx;
  ctx.push_term("q", prop());
  ctx.push_term("n", nat());
  EXPECT_EQ(error_of([&] { kernel::check_proof(sig, ctx, {}, ProofTerm::assume(fv("q")), fv("q")); }),
            KernelErrc::HypNotFound);
  Term pn = ap(cst("le"), fv("m"), fv("m"));
  auto bad_forall = ProofTerm::forall_intro("m", nat(), ProofTerm::assume(pn));
  EXPECT_EQ(error_of([&] {
              kernel::check_proof(sig, ctx, {Term::all("m", nat(), pn)}, bad_forall, Term::all("m", nat(), pn));
            }),
            KernelErrc::HypNotFound);
  TypingContext ctx2 = ctx;
  ctx2.push_term("m", nat());
  EXPECT_EQ(error_of([&] { kernel::check_proof(sig, ctx2, {pn}, bad_forall, Term::all("m", nat(), pn)); }),
            KernelErrc::SideConditionViolated);
  auto conv_bad = ProofTerm::conv(ProofTerm::assume(fv("q")), Term::imp(fv("q"), fv("q")));
  EXPECT_EQ(error_of([&] { kernel::check_proof(sig, ctx, {fv("q")}, conv_bad, Term::imp(fv("q"), fv("q"))); }),
            KernelErrc::ConvFailed);
  EXPECT_EQ(error_of([&] { kernel::check_proof(sig, ctx, {}, ProofTerm::ref("ax"), fv("q")); }),
            KernelErrc::UnknownFact);
  EXPECT_EQ(error_of([&] { kernel::check_proof(sig, ctx, {fv("q")}, ProofTerm::assume(fv("q")), fv("n")); }),
            KernelErrc::NotAProposition);
  auto tyintro = ProofTerm::ty_forall_intro("X", ProofTerm::assume(fv("q")));
  TypingContext ctx3;
  ctx3.push_type("X");
  ctx3.push_term("q", prop());
  EXPECT_EQ(error_of([&] { kernel::check_proof(sig, ctx3, {fv("q")}, tyintro, PolyTerm({"X"}, fv("q"))); }),
            KernelErrc::SideConditionViolated);
}

TEST(CheckProof, TypeInstantiationOfAFact) {
  kernel::Theory thy(mini_nat_sig());
  thy.add_theorem("refl", refl_statement(), refl_proof());
  auto p = ProofTerm::forall_elim(ProofTerm::ty_forall_elim(ProofTerm::ref("refl"), nat()), cst("O"));
  Term goal = ap(cst("leibniz", {nat()}), cst("O"), cst("O"));
  thy.add_theorem("refl_O", goal, p);
  EXPECT_EQ(thy.facts().size(), 2u);
  EXPECT_FALSE(thy.facts()[1].is_axiom());
}

TEST(Theory, RejectsOpenStatementsAndDuplicates) {
  kernel::Theory thy(mini_nat_sig());
  EXPECT_EQ(error_of([&] { thy.add_axiom("a", ap(cst("le"), fv("n"), fv("n"))); }), KernelErrc::UnboundVariable);
  thy.add_axiom("le_O", Term::all("n", nat(), ap(cst("le"), cst("O"), fv("n"))));
  EXPECT_EQ(error_of([&] { thy.add_axiom("le_O", cst("top")); }), KernelErrc::IllFormedContext);
  EXPECT_EQ(error_of([&] { thy.add_axiom("plus", cst("top")); }), KernelErrc::IllFormedContext);
}

TEST(Properties, SubjectClosureAndConvStability) {
  auto sig = leibniz_sig();
  auto th = kernel::check_proof(sig, {}, {}, refl_proof(), refl_statement());
  EXPECT_EQ(kernel::infer_type(sig, {}, th.concl), PolyType(prop()));
  // Every intermediate form along the normalization of the statement body.
  auto n = core::normalize(refl_statement().body, sig);
  Term cur = refl_statement().body;
  for (const auto& step : n.trace.steps) {
    cur = core::apply_step(cur, step, sig);
    PolyTerm g({"X"}, cur);
    EXPECT_NO_THROW(kernel::check_proof(sig, {}, {}, ProofTerm::conv(refl_proof(), g), g));
  }
}

TEST(Properties, ProofEqualityModuloConv) {
  auto th = kernel::check_proof(leibniz_sig(), {}, {}, refl_proof(), refl_statement());
  EXPECT_TRUE(kernel::same_modulo_conv(th.proof, refl_proof()));
  EXPECT_FALSE(kernel::same_modulo_conv(th.proof, ProofTerm::assume(cst("x"))));
}

TEST(Soundness, AdversarialCorpusIsRejectedWithTheDocumentedKinds) {
  auto outcomes = run_adversarial();
  ASSERT_EQ(outcomes.size(), 20u);
  for (const auto& o : outcomes) {
    EXPECT_FALSE(o.accepted) << o.name;
    EXPECT_TRUE(o.kind_ok) << o.name << ": " << o.error;
  }
}

TEST(Soundness, TheAdversarialSetupAcceptsHonestProofs) {
  core::Signature sig = adversarial_sig();
  kernel::FactTable facts = adversarial_facts();
  Term q = fv("q");
  EXPECT_NO_THROW(kernel::check_proof(sig, {}, {}, ProofTerm::ref("imp_refl"), facts.at("imp_refl"), &facts));
  EXPECT_NO_THROW(kernel::check_proof(
      sig, {}, {}, ProofTerm::forall_intro("q", prop(), ProofTerm::imp_intro(q, ProofTerm::assume(q))),
      facts.at("imp_refl"), &facts));
  EXPECT_NO_THROW(kernel::check_proof(sig, {}, {}, ProofTerm::ref("top_true"), facts.at("imp_refl"), &facts));
}

}  // namespace
}  // namespace sttx
