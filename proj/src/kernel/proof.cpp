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

#include "sttx/kernel/proof.hpp"

#include <optional>
#include <set>

namespace sttx::kernel {

using core::MonoType;
using core::PolyTerm;
using core::Position;
using core::Term;

struct ProofTerm::Node {
  Kind kind;
  Term term;
  PolyTerm target;
  std::string name;
  MonoType type;
  ProofTerm a;
  ProofTerm b;
  std::optional<PolyTerm> concl;
};

ProofTerm ProofTerm::assume(Term prop) {
  return ProofTerm(std::make_shared<const Node>(Node{Kind::Assume, std::move(prop), {}, {}, {}, {}, {}, {}}));
}

ProofTerm ProofTerm::imp_intro(Term hyp, ProofTerm body) {
  return ProofTerm(
      std::make_shared<const Node>(Node{Kind::ImpIntro, std::move(hyp), {}, {}, {}, std::move(body), {}, {}}));
}

ProofTerm ProofTerm::imp_elim(ProofTerm fn, ProofTerm arg) {
  return ProofTerm(
      std::make_shared<const Node>(Node{Kind::ImpElim, {}, {}, {}, {}, std::move(fn), std::move(arg), {}}));
}

ProofTerm ProofTerm::forall_intro(std::string var, MonoType annot, ProofTerm body) {
  return ProofTerm(std::make_shared<const Node>(
      Node{Kind::ForallIntro, {}, {}, std::move(var), std::move(annot), std::move(body), {}, {}}));
}

ProofTerm ProofTerm::forall_elim(ProofTerm body, Term witness) {
  return ProofTerm(
      std::make_shared<const Node>(Node{Kind::ForallElim, std::move(witness), {}, {}, {}, std::move(body), {}, {}}));
}

ProofTerm ProofTerm::ty_forall_intro(std::string tyvar, ProofTerm body) {
  return ProofTerm(std::make_shared<const Node>(
      Node{Kind::TyForallIntro, {}, {}, std::move(tyvar), {}, std::move(body), {}, {}}));
}

ProofTerm ProofTerm::ty_forall_elim(ProofTerm body, MonoType witness) {
  return ProofTerm(std::make_shared<const Node>(
      Node{Kind::TyForallElim, {}, {}, {}, std::move(witness), std::move(body), {}, {}}));
}

ProofTerm ProofTerm::conv(ProofTerm body, PolyTerm target) {
  return ProofTerm(
      std::make_shared<const Node>(Node{Kind::Conv, {}, std::move(target), {}, {}, std::move(body), {}, {}}));
}

ProofTerm ProofTerm::ref(std::string name) {
  return ProofTerm(std::make_shared<const Node>(Node{Kind::Ref, {}, {}, std::move(name), {}, {}, {}, {}}));
}

ProofTerm::Kind ProofTerm::kind() const { return node_->kind; }
const Term& ProofTerm::term() const { return node_->term; }
const PolyTerm& ProofTerm::target() const { return node_->target; }
const std::string& ProofTerm::name() const { return node_->name; }
const MonoType& ProofTerm::type() const { return node_->type; }
const ProofTerm& ProofTerm::body() const { return node_->a; }
const ProofTerm& ProofTerm::arg() const { return node_->b; }

std::size_t ProofTerm::num_children() const {
  switch (node_->kind) {
    case Kind::Assume:
    case Kind::Ref:
      return 0;
    case Kind::ImpElim:
      return 2;
    default:
      return 1;
  }
}

const ProofTerm& ProofTerm::child(std::size_t i) const { return i == 0 ? node_->a : node_->b; }

const PolyTerm* ProofTerm::conclusion() const { return node_->concl ? &*node_->concl : nullptr; }

ProofTerm ProofTerm::with_conclusion(PolyTerm concl) const {
  Node n = *node_;
  n.concl = std::move(concl);
  return ProofTerm(std::make_shared<const Node>(std::move(n)));
}

std::size_t ProofTerm::size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < num_children(); ++i) n += child(i).size();
  return n;
}

const char* rule_name(ProofTerm::Kind k) {
  switch (k) {
    case ProofTerm::Kind::Assume:
      return "Assume";
    case ProofTerm::Kind::ImpIntro:
      return "ImpIntro";
    case ProofTerm::Kind::ImpElim:
      return "ImpElim";
    case ProofTerm::Kind::ForallIntro:
      return "ForallIntro";
    case ProofTerm::Kind::ForallElim:
      return "ForallElim";
    case ProofTerm::Kind::TyForallIntro:
      return "TyForallIntro";
    case ProofTerm::Kind::TyForallElim:
      return "TyForallElim";
    case ProofTerm::Kind::Conv:
      return "Conv";
    case ProofTerm::Kind::Ref:
      return "Ref";
  }
  return "?";
}

namespace {

struct Checker {
  const core::Signature& sig;
  const FactTable* facts;
  std::size_t fuel;
  core::TypingContext ctx;
  std::vector<Term> hyps;
  Position path;

  [[noreturn]] void fail(KernelErrc k, const std::string& msg) { throw KernelError(k, msg, path); }

  bool convertible(const PolyTerm& a, const PolyTerm& b) { return core::conv(a, b, sig, fuel).has_value(); }

  const Term& mono_concl(const ProofTerm& p, const char* what) {
    const PolyTerm& c = *p.conclusion();
    if (!c.is_mono()) fail(KernelErrc::RuleMismatch, std::string(what) + " proves a type-quantified statement");
    return c.body;
  }

  ProofTerm sub(const ProofTerm& p, std::uint8_t i) {
    path.push_back(i);
    ProofTerm r = check(p);
    path.pop_back();
    return r;
  }

  void check_type(const MonoType& a) {
    if (!wf_monotype(sig, ctx, a)) fail(KernelErrc::IllFormedType, "ill-formed type " + core::to_string(a));
  }

  ProofTerm check(const ProofTerm& p) {
    if (!p.valid()) fail(KernelErrc::RuleMismatch, "empty proof");
    switch (p.kind()) {
      case ProofTerm::Kind::Assume: {
        check_proposition(sig, ctx, p.term());
        for (const auto& h : hyps) {
          if (h == p.term()) return p.with_conclusion(p.term());
        }
        for (const auto& h : hyps) {
          if (convertible(h, p.term())) {
            return ProofTerm::conv(ProofTerm::assume(h).with_conclusion(h), p.term()).with_conclusion(p.term());
          }
        }
        fail(KernelErrc::HypNotFound, core::to_string(p.term()));
      }
      case ProofTerm::Kind::ImpIntro: {
        check_proposition(sig, ctx, p.term());
        hyps.push_back(p.term());
        ProofTerm b = sub(p.body(), 0);
        hyps.pop_back();
        Term c = Term::imp(p.term(), mono_concl(b, "ImpIntro body"));
        return ProofTerm::imp_intro(p.term(), b).with_conclusion(c);
      }
      case ProofTerm::Kind::ImpElim: {
        ProofTerm f = sub(p.body(), 0);
        const Term& cf = mono_concl(f, "ImpElim function");
        if (!cf.is(Term::Kind::Imp)) fail(KernelErrc::RuleMismatch, "ImpElim on " + core::to_string(cf));
        ProofTerm a = sub(p.arg(), 1);
        const Term& ca = mono_concl(a, "ImpElim argument");
        if (!(ca == cf.lhs())) {
          if (!convertible(ca, cf.lhs())) {
            fail(KernelErrc::RuleMismatch,
                 "argument proves " + core::to_string(ca) + ", expected " + core::to_string(cf.lhs()));
          }
          a = ProofTerm::conv(a, cf.lhs()).with_conclusion(cf.lhs());
        }
        return ProofTerm::imp_elim(f, a).with_conclusion(cf.rhs());
      }
      case ProofTerm::Kind::ForallIntro: {
        check_type(p.type());
        if (ctx.binds(p.name())) fail(KernelErrc::SideConditionViolated, p.name() + " is already in the context");
        for (const auto& h : hyps) {
          if (core::free_vars(h).count(p.name())) {
            fail(KernelErrc::SideConditionViolated, p.name() + " is free in hypothesis " + core::to_string(h));
          }
        }
        ctx.push_term(p.name(), p.type());
        ProofTerm b = sub(p.body(), 0);
        ctx.pop();
        Term c = Term::all(p.name(), p.type(), mono_concl(b, "ForallIntro body"));
        return ProofTerm::forall_intro(p.name(), p.type(), b).with_conclusion(c);
      }
      case ProofTerm::Kind::ForallElim: {
        ProofTerm b = sub(p.body(), 0);
        const Term& cb = mono_concl(b, "ForallElim body");
        if (!cb.is(Term::Kind::Forall)) fail(KernelErrc::RuleMismatch, "ForallElim on " + core::to_string(cb));
        MonoType wt = infer_mono(sig, ctx, p.term());
        if (!(wt == cb.annot())) {
          fail(KernelErrc::TypeMismatch,
               "witness has type " + core::to_string(wt) + ", expected " + core::to_string(cb.annot()));
        }
        return ProofTerm::forall_elim(b, p.term()).with_conclusion(core::open(cb.body(), p.term()));
      }
      case ProofTerm::Kind::TyForallIntro: {
        if (ctx.binds(p.name())) fail(KernelErrc::SideConditionViolated, p.name() + " is already in the context");
        for (const auto& h : hyps) {
          std::set<std::string> tvs;
          core::free_type_vars(h, tvs);
          if (tvs.count(p.name())) {
            fail(KernelErrc::SideConditionViolated, p.name() + " is free in hypothesis " + core::to_string(h));
          }
        }
        ctx.push_type(p.name());
        ProofTerm b = sub(p.body(), 0);
        ctx.pop();
        PolyTerm c = core::abstract_type(*b.conclusion(), p.name());
        return ProofTerm::ty_forall_intro(p.name(), b).with_conclusion(std::move(c));
      }
      case ProofTerm::Kind::TyForallElim: {
        ProofTerm b = sub(p.body(), 0);
        const PolyTerm& cb = *b.conclusion();
        if (cb.is_mono()) fail(KernelErrc::RuleMismatch, "TyForallElim on " + core::to_string(cb));
        check_type(p.type());
        return ProofTerm::ty_forall_elim(b, p.type()).with_conclusion(core::open_type(cb, p.type()));
      }
      case ProofTerm::Kind::Conv: {
        ProofTerm b = sub(p.body(), 0);
        check_proposition(sig, ctx, p.target());
        if (!convertible(*b.conclusion(), p.target())) {
          fail(KernelErrc::ConvFailed,
               core::to_string(*b.conclusion()) + " is not convertible to " + core::to_string(p.target()));
        }
        return ProofTerm::conv(b, p.target()).with_conclusion(p.target());
      }
      case ProofTerm::Kind::Ref: {
        if (!facts) fail(KernelErrc::UnknownFact, p.name());
        auto it = facts->find(p.name());
        if (it == facts->end()) fail(KernelErrc::UnknownFact, p.name());
        return p.with_conclusion(it->second);
      }
    }
    fail(KernelErrc::RuleMismatch, "unknown proof node");
  }
};

}  // namespace

Theorem check_proof(const core::Signature& sig, const core::TypingContext& ctx, const std::vector<Term>& hyps,
                    const ProofTerm& p, const PolyTerm& goal, const FactTable* facts, std::size_t fuel) {
  if (!wf_context(sig, ctx)) throw KernelError(KernelErrc::IllFormedContext, "ill-formed typing context");
  for (const auto& h : hyps) check_proposition(sig, ctx, h);
  check_proposition(sig, ctx, goal);
  Checker c{sig, facts, fuel, ctx, hyps, {}};
  ProofTerm e = c.check(p);
  if (!(*e.conclusion() == goal)) {
    if (!c.convertible(*e.conclusion(), goal)) {
      throw KernelError(KernelErrc::RuleMismatch,
                        "proof concludes " + core::to_string(*e.conclusion()) + ", goal is " + core::to_string(goal));
    }
    e = ProofTerm::conv(e, goal).with_conclusion(goal);
  }
  Theorem th;
  for (const auto& entry : ctx.entries()) {
    if (!entry.type) th.tyvars.push_back(entry.name);
  }
  th.ctx = ctx;
  th.hyps = hyps;
  th.concl = goal;
  th.proof = std::move(e);
  return th;
}

ProofTerm erase_conv(const ProofTerm& p) {
  switch (p.kind()) {
    case ProofTerm::Kind::Conv:
      return erase_conv(p.body());
    case ProofTerm::Kind::Assume:
      return ProofTerm::assume(p.term());
    case ProofTerm::Kind::Ref:
      return ProofTerm::ref(p.name());
    case ProofTerm::Kind::ImpIntro:
      return ProofTerm::imp_intro(p.term(), erase_conv(p.body()));
    case ProofTerm::Kind::ImpElim:
      return ProofTerm::imp_elim(erase_conv(p.body()), erase_conv(p.arg()));
    case ProofTerm::Kind::ForallIntro:
      return ProofTerm::forall_intro(p.name(), p.type(), erase_conv(p.body()));
    case ProofTerm::Kind::ForallElim:
      return ProofTerm::forall_elim(erase_conv(p.body()), p.term());
    case ProofTerm::Kind::TyForallIntro:
      return ProofTerm::ty_forall_intro(p.name(), erase_conv(p.body()));
    case ProofTerm::Kind::TyForallElim:
      return ProofTerm::ty_forall_elim(erase_conv(p.body()), p.type());
  }
  return p;
}

namespace {

bool same_shape(const ProofTerm& a, const ProofTerm& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ProofTerm::Kind::Assume:
      return a.term() == b.term();
    case ProofTerm::Kind::ImpIntro:
      if (!(a.term() == b.term())) return false;
      break;
    case ProofTerm::Kind::ForallIntro:
    case ProofTerm::Kind::TyForallIntro:
      if (a.name() != b.name()) return false;
      if (a.is(ProofTerm::Kind::ForallIntro) && !(a.type() == b.type())) return false;
      break;
    case ProofTerm::Kind::Ref:
      return a.name() == b.name();
    case ProofTerm::Kind::ForallElim:
      if (!(a.term() == b.term())) return false;
      break;
    case ProofTerm::Kind::TyForallElim:
      if (!(a.type() == b.type())) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.num_children(); ++i) {
    if (!same_shape(a.child(i), b.child(i))) return false;
  }
  return true;
}

}  // namespace

bool same_modulo_conv(const ProofTerm& a, const ProofTerm& b) { return same_shape(erase_conv(a), erase_conv(b)); }

std::string to_string(const ProofTerm& p) {
  std::string out = rule_name(p.kind());
  switch (p.kind()) {
    case ProofTerm::Kind::Assume:
      return out + "(" + core::to_string(p.term()) + ")";
    case ProofTerm::Kind::Ref:
      return out + "(" + p.name() + ")";
    case ProofTerm::Kind::ImpIntro:
      return out + "(" + core::to_string(p.term()) + ", " + to_string(p.body()) + ")";
    case ProofTerm::Kind::ImpElim:
      return out + "(" + to_string(p.body()) + ", " + to_string(p.arg()) + ")";
    case ProofTerm::Kind::ForallIntro:
      return out + "(" + p.name() + ":" + core::to_string(p.type()) + ", " + to_string(p.body()) + ")";
    case ProofTerm::Kind::ForallElim:
      return out + "(" + to_string(p.body()) + ", " + core::to_string(p.term()) + ")";
    case ProofTerm::Kind::TyForallIntro:
      return out + "(" + p.name() + ", " + to_string(p.body()) + ")";
    case ProofTerm::Kind::TyForallElim:
      return out + "(" + to_string(p.body()) + ", " + core::to_string(p.type()) + ")";
    case ProofTerm::Kind::Conv:
      return out + "(" + to_string(p.body()) + ", " + core::to_string(p.target()) + ")";
  }
  return out;
}

}  // namespace sttx::kernel
