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

#include "sttx/ot/derivation.hpp"

#include <set>

namespace sttx::ot::exporter {

std::string_view to_string(ExportErrc e) {
  switch (e) {
    case ExportErrc::FreshnessViolation:
      return "FreshnessViolation";
    case ExportErrc::InternalDerivationError:
      return "InternalDerivationError";
    case ExportErrc::PathMismatch:
      return "PathMismatch";
    case ExportErrc::TraceMismatch:
      return "TraceMismatch";
    case ExportErrc::FreshPoolExhausted:
      return "FreshPoolExhausted";
  }
  return "?";
}

struct Thm::Node {
  Rule rule;
  Sequent seq;
  OtTerm term;
  OtVar var;
  TypeInst tys;
  TermInst tms;
  std::string name;
  std::vector<Thm> premises;
};

Thm::Rule Thm::rule() const { return node_->rule; }
const Sequent& Thm::sequent() const { return node_->seq; }
const OtTerm& Thm::term() const { return node_->term; }
const OtVar& Thm::var() const { return node_->var; }
const TypeInst& Thm::type_inst() const { return node_->tys; }
const TermInst& Thm::term_inst() const { return node_->tms; }
const std::string& Thm::name() const { return node_->name; }
const std::vector<Thm>& Thm::premises() const { return node_->premises; }

namespace {

[[noreturn]] void bad(const char* rule, const std::string& msg) {
  throw ExportError(ExportErrc::InternalDerivationError, std::string(rule) + ": " + msg);
}

OtType inst_type(const OtType& t, const std::map<std::string, OtType>& s) {
  if (t.is_var()) {
    auto it = s.find(t.name());
    return it == s.end() ? t : it->second;
  }
  bool changed = false;
  std::vector<OtType> args;
  for (const auto& a : t.args()) {
    args.push_back(inst_type(a, s));
    changed = changed || !(args.back() == a);
  }
  return changed ? OtType::op(t.name(), std::move(args)) : t;
}

// A name based on `base` that is not in `used`.
std::string variant(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (std::size_t i = 0;; ++i) {
    std::string n = base + std::to_string(i);
    if (!used.count(n)) return n;
  }
}

std::set<std::string> names_free_in(const OtTerm& t) {
  std::set<std::string> out;
  for (const auto& v : free_vars(t)) out.insert(v.name);
  return out;
}

std::vector<OtTerm> merge(const std::vector<OtTerm>& a, const std::vector<OtTerm>& b) {
  std::vector<OtTerm> out = a;
  for (const auto& h : b) {
    if (!has_hyp(out, h)) out.push_back(h);
  }
  return out;
}

std::vector<OtTerm> without(const std::vector<OtTerm>& a, const OtTerm& p) {
  std::vector<OtTerm> out;
  out.reserve(a.size());
  for (const auto& h : a) {
    if (!alpha_eq(h, p)) out.push_back(h);
  }
  return out;
}

}  // namespace

OtTerm substitute(const OtTerm& t, const std::map<OtVar, OtTerm>& tms) {
  if (tms.empty()) return t;
  switch (t.kind()) {
    case OtTerm::Kind::Var: {
      auto it = tms.find(OtVar{t.name(), t.type()});
      return it == tms.end() ? t : it->second;
    }
    case OtTerm::Kind::Const:
      return t;
    case OtTerm::Kind::App: {
      OtTerm f = substitute(t.fn(), tms);
      OtTerm x = substitute(t.arg(), tms);
      if (f.same_node(t.fn()) && x.same_node(t.arg())) return t;
      return OtTerm::app(f, x);
    }
    case OtTerm::Kind::Abs: {
      const OtVar v = t.bound();
      std::map<OtVar, OtTerm> inner;
      bool clash = false;
      for (const auto& [w, img] : tms) {
        if (w == v || !occurs_free(w, t.body())) continue;
        inner.emplace(w, img);
        if (occurs_free(v, img)) clash = true;
      }
      if (inner.empty()) return t;
      if (!clash) return OtTerm::abs(v, substitute(t.body(), inner));
      std::set<std::string> used = names_free_in(t.body());
      for (const auto& [w, img] : inner) {
        auto n = names_free_in(img);
        used.insert(n.begin(), n.end());
      }
      OtVar fresh{variant(v.name, used), v.type};
      inner.emplace(v, OtTerm::var(fresh));
      return OtTerm::abs(fresh, substitute(t.body(), inner));
    }
  }
  return t;
}

OtTerm instantiate(const OtTerm& t, const std::map<std::string, OtType>& tys) {
  if (tys.empty()) return t;
  switch (t.kind()) {
    case OtTerm::Kind::Var:
      return OtTerm::var(t.name(), inst_type(t.type(), tys));
    case OtTerm::Kind::Const:
      return OtTerm::cnst(t.name(), inst_type(t.type(), tys));
    case OtTerm::Kind::App:
      return OtTerm::app(instantiate(t.fn(), tys), instantiate(t.arg(), tys));
    case OtTerm::Kind::Abs: {
      OtVar v = t.bound();
      OtTerm body = t.body();
      const OtType vt = inst_type(v.type, tys);
      std::set<OtVar> fv = free_vars(body);
      bool clash = false;
      for (const auto& w : fv) {
        if (w.name == v.name && !(w.type == v.type) && inst_type(w.type, tys) == vt) clash = true;
      }
      if (clash) {
        std::set<std::string> used;
        for (const auto& w : fv) used.insert(w.name);
        OtVar fresh{variant(v.name, used), v.type};
        body = substitute(body, {{v, OtTerm::var(fresh)}});
        v = fresh;
      }
      return OtTerm::abs({v.name, vt}, instantiate(body, tys));
    }
  }
  return t;
}

Thm Prim::assume(const OtTerm& p) {
  if (!p.type().is_bool()) bad("assume", "not a proposition: " + to_string(p));
  return Thm(std::make_shared<const Thm::Node>(Thm::Node{Thm::Rule::Assume, {{p}, p}, p, {}, {}, {}, {}, {}}));
}

Thm Prim::refl(const OtTerm& t) {
  return Thm(std::make_shared<const Thm::Node>(
      Thm::Node{Thm::Rule::Refl, {{}, OtTerm::eq(t, t)}, t, {}, {}, {}, {}, {}}));
}

Thm Prim::app_thm(const Thm& fg, const Thm& xy) {
  if (!fg.concl().is_eq() || !xy.concl().is_eq()) bad("appThm", "premises must be equations");
  OtTerm l;
  OtTerm r;
  try {
    l = OtTerm::app(fg.concl().lhs(), xy.concl().lhs());
    r = OtTerm::app(fg.concl().rhs(), xy.concl().rhs());
  } catch (const OtTypeError& e) {
    bad("appThm", e.what());
  }
  return Thm(std::make_shared<const Thm::Node>(Thm::Node{
      Thm::Rule::AppThm, {merge(fg.hyps(), xy.hyps()), OtTerm::eq(l, r)}, {}, {}, {}, {}, {}, {fg, xy}}));
}

Thm Prim::abs_thm(const OtVar& v, const Thm& th) {
  if (!th.concl().is_eq()) bad("absThm", "premise must be an equation");
  for (const auto& h : th.hyps()) {
    if (occurs_free(v, h)) bad("absThm", v.name + " is free in hypothesis " + to_string(h));
  }
  OtTerm c = OtTerm::eq(OtTerm::abs(v, th.concl().lhs()), OtTerm::abs(v, th.concl().rhs()));
  return Thm(std::make_shared<const Thm::Node>(
      Thm::Node{Thm::Rule::AbsThm, {th.hyps(), std::move(c)}, {}, v, {}, {}, {}, {th}}));
}

Thm Prim::beta_conv(const OtTerm& redex) {
  if (!redex.is(OtTerm::Kind::App) || !redex.fn().is(OtTerm::Kind::Abs)) {
    bad("betaConv", "not a redex: " + to_string(redex));
  }
  OtTerm reduct = substitute(redex.fn().body(), {{redex.fn().bound(), redex.arg()}});
  return Thm(std::make_shared<const Thm::Node>(
      Thm::Node{Thm::Rule::BetaConv, {{}, OtTerm::eq(redex, reduct)}, redex, {}, {}, {}, {}, {}}));
}

Thm Prim::subst(TypeInst tys, TermInst tms, const Thm& th) {
  std::map<std::string, OtType> ty_map;
  for (const auto& [n, t] : tys) {
    if (!ty_map.emplace(n, t).second) bad("subst", "type variable " + n + " mapped twice");
  }
  std::map<OtVar, OtTerm> tm_map;
  for (const auto& [v, t] : tms) {
    if (!(v.type == t.type())) bad("subst", v.name + " : " + to_string(v.type) + " mapped to " + to_string(t));
    if (!tm_map.emplace(v, t).second) bad("subst", "variable " + v.name + " mapped twice");
  }
  auto apply = [&](const OtTerm& t) { return substitute(instantiate(t, ty_map), tm_map); };
  Sequent s;
  for (const auto& h : th.hyps()) {
    OtTerm x = apply(h);
    if (!has_hyp(s.hyps, x)) s.hyps.push_back(std::move(x));
  }
  s.concl = apply(th.concl());
  return Thm(std::make_shared<const Thm::Node>(
      Thm::Node{Thm::Rule::Subst, std::move(s), {}, {}, std::move(tys), std::move(tms), {}, {th}}));
}

Thm Prim::eq_mp(const Thm& eq, const Thm& th) {
  if (!eq.concl().is_eq()) bad("eqMp", "first premise must be an equation: " + to_string(eq.concl()));
  if (!alpha_eq(eq.concl().lhs(), th.concl())) {
    bad("eqMp", to_string(eq.concl().lhs()) + " does not match " + to_string(th.concl()));
  }
  return Thm(std::make_shared<const Thm::Node>(Thm::Node{
      Thm::Rule::EqMp, {merge(eq.hyps(), th.hyps()), eq.concl().rhs()}, {}, {}, {}, {}, {}, {eq, th}}));
}

Thm Prim::deduct_antisym(const Thm& a, const Thm& b) {
  Sequent s{merge(without(a.hyps(), b.concl()), without(b.hyps(), a.concl())), OtTerm::eq(a.concl(), b.concl())};
  return Thm(std::make_shared<const Thm::Node>(
      Thm::Node{Thm::Rule::DeductAntisym, std::move(s), {}, {}, {}, {}, {}, {a, b}}));
}

Thm Prim::prove_hyp(const Thm& hyp, const Thm& th) {
  Sequent s{merge(hyp.hyps(), without(th.hyps(), hyp.concl())), th.concl()};
  return Thm(std::make_shared<const Thm::Node>(
      Thm::Node{Thm::Rule::ProveHyp, std::move(s), {}, {}, {}, {}, {}, {hyp, th}}));
}

Thm Prim::axiom(std::vector<OtTerm> hyps, const OtTerm& concl) {
  Sequent s;
  for (auto& h : hyps) {
    if (!h.type().is_bool()) bad("axiom", "hypothesis is not a proposition: " + to_string(h));
    if (!has_hyp(s.hyps, h)) s.hyps.push_back(std::move(h));
  }
  if (!concl.type().is_bool()) bad("axiom", "not a proposition: " + to_string(concl));
  s.concl = concl;
  return Thm(std::make_shared<const Thm::Node>(Thm::Node{Thm::Rule::Axiom, std::move(s), {}, {}, {}, {}, {}, {}}));
}

Thm Prim::define_const(const std::string& name, const OtTerm& body) {
  if (!free_vars(body).empty()) bad("defineConst", "body has free variables: " + to_string(body));
  std::set<std::string> in_body;
  std::set<std::string> in_type;
  type_vars(body, in_body);
  type_vars(body.type(), in_type);
  if (in_body != in_type) bad("defineConst", "type variables of " + name + " do not all occur in its type");
  Sequent s{{}, OtTerm::eq(OtTerm::cnst(name, body.type()), body)};
  return Thm(std::make_shared<const Thm::Node>(
      Thm::Node{Thm::Rule::DefineConst, std::move(s), body, {}, {}, {}, name, {}}));
}

}  // namespace sttx::ot::exporter
