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

#include "sttx/ot/export.hpp"

#include <cctype>
#include <limits>

namespace sttx::ot::exporter {

using core::MonoType;
using core::Term;
using kernel::ProofTerm;

namespace {

OtType B() { return OtType::boolean(); }
OtType bin_op_type() { return OtType::fun(B(), OtType::fun(B(), B())); }

[[noreturn]] void internal(const std::string& msg) { throw ExportError(ExportErrc::InternalDerivationError, msg); }

bool is_pool_name(const std::string& n) {
  if (n.size() < 3 || n.compare(0, 2, "Z%") != 0) return false;
  for (std::size_t i = 2; i < n.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(n[i]))) return false;
  }
  return true;
}

bool valid_hint(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  }
  return true;
}

// Beta-reduces both arguments off `(\v1 v2 ... . b) a1 a2 ...` in `eq : c = lam`.
Thm apply_definition(const Thm& eq, std::initializer_list<OtTerm> args, Exporter& ex) {
  Thm th = eq;
  for (const auto& a : args) {
    Thm step = Prim::app_thm(th, Prim::refl(a));
    th = ex.trans(step, Prim::beta_conv(step.concl().rhs()));
  }
  return th;
}

template <class F>
auto in_phase(const char* phase, F&& f) {
  try {
    return f();
  } catch (const ExportError& e) {
    if (!e.phase().empty()) throw;
    throw ExportError(e.kind(), e.message(), phase);
  }
}

}  // namespace

OtTerm Prelude::truth() { return OtTerm::cnst(kTruth, B()); }
OtTerm Prelude::conj() { return OtTerm::cnst(kAnd, bin_op_type()); }
OtTerm Prelude::imp() { return OtTerm::cnst(kImp, bin_op_type()); }
OtTerm Prelude::all(const OtType& a) { return OtTerm::cnst(kAll, OtType::fun(OtType::fun(a, B()), B())); }

Exporter::Exporter(core::Signature sig, Options opts) : sig_(std::move(sig)), opts_(std::move(opts)) {
  const OtVar x{"x", B()};
  const OtVar y{"y", B()};
  const OtVar f{"f", bin_op_type()};
  const OtType a = OtType::var("A");
  const OtVar p{"P", OtType::fun(a, B())};
  const OtTerm tt = Prelude::truth();
  const OtTerm id = OtTerm::abs(x, OtTerm::var(x));
  const OtTerm truth_rhs = OtTerm::eq(id, id);
  auto and_rhs = [&](const OtTerm& l, const OtTerm& r) {
    return OtTerm::eq(OtTerm::abs(f, OtTerm::apps(OtTerm::var(f), {l, r})),
                      OtTerm::abs(f, OtTerm::apps(OtTerm::var(f), {tt, tt})));
  };
  auto imp_rhs = [&](const OtTerm& l, const OtTerm& r) { return OtTerm::eq(OtTerm::apps(Prelude::conj(), {l, r}), l); };
  const OtTerm all_rhs = OtTerm::eq(OtTerm::var(p), OtTerm::abs({"x", a}, tt));
  const OtTerm vx = OtTerm::var(x);
  const OtTerm vy = OtTerm::var(y);

  if (!opts_.define_connectives) {
    prelude_.truth_def = Prim::axiom({}, OtTerm::eq(tt, truth_rhs));
    prelude_.and_def = Prim::axiom({}, OtTerm::eq(OtTerm::apps(Prelude::conj(), {vx, vy}), and_rhs(vx, vy)));
    prelude_.imp_def = Prim::axiom({}, OtTerm::eq(OtTerm::apps(Prelude::imp(), {vx, vy}), imp_rhs(vx, vy)));
    prelude_.all_def = Prim::axiom({}, OtTerm::eq(OtTerm::app(Prelude::all(a), OtTerm::var(p)), all_rhs));
  } else {
    Thm dt = Prim::define_const(kTruth, truth_rhs);
    Thm da = Prim::define_const(kAnd, OtTerm::abs(x, OtTerm::abs(y, and_rhs(vx, vy))));
    Thm di = Prim::define_const(kImp, OtTerm::abs(x, OtTerm::abs(y, imp_rhs(vx, vy))));
    Thm dl = Prim::define_const(kAll, OtTerm::abs(p, all_rhs));
    prelude_.definitions = {dt, da, di, dl};
    prelude_.truth_def = dt;
    prelude_.and_def = apply_definition(da, {vx, vy}, *this);
    prelude_.imp_def = apply_definition(di, {vx, vy}, *this);
    prelude_.all_def = apply_definition(dl, {OtTerm::var(p)}, *this);
  }
  definitions_ = prelude_.definitions;
  exports_.push_back({"sttx.T_def", prelude_.truth_def});
  exports_.push_back({"sttx.and_def", prelude_.and_def});
  exports_.push_back({"sttx.imp_def", prelude_.imp_def});
  exports_.push_back({"sttx.all_def", prelude_.all_def});
}

// ---- term translation ----

std::string Exporter::type_var_name(const std::string& source) const {
  if (source.compare(0, 2, "Z%") == 0) return "Z%" + source;
  return source;
}

OtType Exporter::type(const MonoType& a, const std::vector<std::string>& binders) const {
  switch (a.kind()) {
    case MonoType::Kind::Prop:
      return B();
    case MonoType::Kind::Fun:
      return OtType::fun(type(a.dom(), binders), type(a.cod(), binders));
    case MonoType::Kind::Op: {
      std::vector<OtType> args;
      for (const auto& x : a.args()) args.push_back(type(x, binders));
      return OtType::op(a.name(), std::move(args));
    }
    case MonoType::Kind::Var:
      return OtType::var(type_var_name(a.name()));
    case MonoType::Kind::Bound:
      if (a.level() >= binders.size()) internal("unbound type level " + std::to_string(a.level()));
      return OtType::var(binders[a.level()]);
  }
  return B();
}

std::string Exporter::fresh_var(const std::string& hint, const Env& env) const {
  std::string n = valid_hint(hint) ? hint : "x";
  while (env.vars.count(n)) n += '\'';
  return n;
}

OtTerm Exporter::term(const Term& t, const Env& env) const {
  Env e = env;
  return translate(t, e);
}

OtTerm Exporter::translate(const Term& t, Env& env) const {
  switch (t.kind()) {
    case Term::Kind::Bound:
      internal("loose bound variable");
    case Term::Kind::Free: {
      auto it = env.vars.find(t.name());
      if (it == env.vars.end()) internal("unbound variable " + t.name());
      return OtTerm::var(t.name(), type(it->second, env.binders));
    }
    case Term::Kind::Const: {
      const core::PolyType* pt = sig_.constant_type(t.name());
      if (!pt) internal("unknown constant " + t.name());
      if (pt->binders.size() != t.tyargs().size()) internal("partially instantiated constant " + t.name());
      return OtTerm::cnst(t.name(), type(core::instantiate_bound(pt->body, t.tyargs()), env.binders));
    }
    case Term::Kind::App:
      try {
        return OtTerm::app(translate(t.fn(), env), translate(t.arg(), env));
      } catch (const OtTypeError& e) {
        internal(e.what());
      }
    case Term::Kind::Imp:
      return OtTerm::apps(Prelude::imp(), {translate(t.lhs(), env), translate(t.rhs(), env)});
    case Term::Kind::Abs:
    case Term::Kind::Forall: {
      std::string v = fresh_var(t.name(), env);
      env.vars.emplace(v, t.annot());
      OtTerm body = translate(core::open(t.body(), Term::free(v)), env);
      env.vars.erase(v);
      OtType a = type(t.annot(), env.binders);
      OtTerm lam = OtTerm::abs({v, a}, body);
      return t.is(Term::Kind::Abs) ? lam : OtTerm::app(Prelude::all(a), lam);
    }
  }
  internal("unreachable");
}

std::vector<std::string> Exporter::binder_names(const core::PolyTerm& t, const std::set<std::string>& avoid) const {
  std::vector<std::string> out;
  std::set<std::string> used = avoid;
  for (const auto& b : t.binders) {
    std::string n = type_var_name(valid_hint(b) ? b : "A");
    while (used.count(n)) n += '\'';
    used.insert(n);
    out.push_back(n);
  }
  return out;
}

std::string Exporter::fresh_type_var() {
  if (fresh_counter_ == std::numeric_limits<std::size_t>::max()) {
    throw ExportError(ExportErrc::FreshPoolExhausted, "no fresh type variable left");
  }
  return "Z%" + std::to_string(fresh_counter_++);
}

// ---- derived rules ----

Thm Exporter::truth() {
  if (!truth_.valid()) {
    const OtTerm& id = prelude_.truth_def.concl().rhs().lhs();
    truth_ = Prim::eq_mp(sym(prelude_.truth_def), Prim::refl(id));
  }
  return truth_;
}

Thm Exporter::sym(const Thm& eq) {
  if (!eq.concl().is_eq()) internal("sym: not an equation: " + to_string(eq.concl()));
  const OtTerm& a = eq.concl().lhs();
  Thm t1 = Prim::app_thm(Prim::refl(OtTerm::eq_const(a.type())), eq);
  Thm t2 = Prim::app_thm(t1, Prim::refl(a));
  return Prim::eq_mp(t2, Prim::refl(a));
}

Thm Exporter::trans(const Thm& ab, const Thm& bc) {
  if (!ab.concl().is_eq() || !bc.concl().is_eq()) internal("trans: premises must be equations");
  if (ab.rule() == Thm::Rule::Refl && alpha_eq(ab.concl().rhs(), bc.concl().lhs())) return bc;
  if (bc.rule() == Thm::Rule::Refl && alpha_eq(ab.concl().rhs(), bc.concl().lhs())) return ab;
  const OtTerm& a = ab.concl().lhs();
  Thm t = Prim::app_thm(Prim::refl(OtTerm::app(OtTerm::eq_const(a.type()), a)), bc);
  return Prim::eq_mp(t, ab);
}

Thm Exporter::eq_truth(const Thm& th) { return Prim::deduct_antisym(th, truth()); }

Thm Exporter::and_instance(const OtTerm& p, const OtTerm& q) {
  return Prim::subst({}, {{OtVar{"x", B()}, p}, {OtVar{"y", B()}, q}}, prelude_.and_def);
}

Thm Exporter::imp_instance(const OtTerm& p, const OtTerm& q) {
  return Prim::subst({}, {{OtVar{"x", B()}, p}, {OtVar{"y", B()}, q}}, prelude_.imp_def);
}

Thm Exporter::all_instance(const OtType& a, const OtTerm& pred) {
  Thm th = prelude_.all_def;
  if (!(a == OtType::var("A"))) th = Prim::subst({{"A", a}}, {}, th);
  return Prim::subst({}, {{OtVar{"P", OtType::fun(a, B())}, pred}}, th);
}

Thm Exporter::and_intro(const Thm& a, const Thm& b) {
  const OtTerm& p = a.concl();
  const OtTerm& q = b.concl();
  std::set<std::string> used;
  for (const auto* hs : {&a.hyps(), &b.hyps()}) {
    for (const auto& h : *hs) {
      for (const auto& v : free_vars(h)) used.insert(v.name);
    }
  }
  for (const auto& v : free_vars(p)) used.insert(v.name);
  for (const auto& v : free_vars(q)) used.insert(v.name);
  std::string fname = "f";
  while (used.count(fname)) fname += '\'';
  const OtVar f{fname, bin_op_type()};
  Thm c = Prim::app_thm(Prim::app_thm(Prim::refl(OtTerm::var(f)), eq_truth(a)), eq_truth(b));
  Thm d = Prim::abs_thm(f, c);
  return Prim::eq_mp(sym(and_instance(p, q)), d);
}

namespace {

bool dest_binary(const OtTerm& t, const char* c, OtTerm& l, OtTerm& r) {
  if (!t.is(OtTerm::Kind::App) || !t.fn().is(OtTerm::Kind::App)) return false;
  const OtTerm& h = t.fn().fn();
  if (!h.is(OtTerm::Kind::Const) || h.name() != c) return false;
  l = t.fn().arg();
  r = t.arg();
  return true;
}

}  // namespace

Thm Exporter::and_elim(const Thm& th, bool left) {
  OtTerm p;
  OtTerm q;
  if (!dest_binary(th.concl(), kAnd, p, q)) internal("and_elim: not a conjunction: " + to_string(th.concl()));
  Thm e = Prim::eq_mp(and_instance(p, q), th);
  const OtVar va{"a", B()};
  const OtVar vb{"b", B()};
  OtTerm k = OtTerm::abs(va, OtTerm::abs(vb, OtTerm::var(left ? va : vb)));
  Thm g = Prim::app_thm(e, Prim::refl(k));
  // (\f. f u v) k = u (or v), in three beta steps.
  auto select = [&](const OtTerm& redex) {
    Thm s1 = Prim::beta_conv(redex);
    const OtTerm& kuv = s1.concl().rhs();
    Thm s2 = Prim::app_thm(Prim::beta_conv(kuv.fn()), Prim::refl(kuv.arg()));
    Thm s3 = Prim::beta_conv(s2.concl().rhs());
    return trans(trans(s1, s2), s3);
  };
  Thm pt = trans(trans(sym(select(g.concl().lhs())), g), select(g.concl().rhs()));
  return Prim::eq_mp(sym(pt), truth());
}

Thm Exporter::imp_intro(const OtTerm& p, const Thm& th) {
  Thm c = and_intro(Prim::assume(p), th);
  Thm d = and_elim(Prim::assume(c.concl()), true);
  Thm e = Prim::deduct_antisym(c, d);
  return Prim::eq_mp(sym(imp_instance(p, th.concl())), e);
}

Thm Exporter::imp_elim(const Thm& imp, const Thm& arg) {
  OtTerm p;
  OtTerm q;
  if (!dest_binary(imp.concl(), kImp, p, q)) internal("imp_elim: not an implication: " + to_string(imp.concl()));
  Thm g = Prim::eq_mp(imp_instance(p, q), imp);
  Thm h = Prim::eq_mp(sym(g), arg);
  return and_elim(h, false);
}

Thm Exporter::forall_intro(const OtVar& v, const Thm& th) {
  for (const auto& h : th.hyps()) {
    if (occurs_free(v, h)) {
      throw ExportError(ExportErrc::FreshnessViolation, v.name + " is free in hypothesis " + to_string(h));
    }
  }
  Thm e = eq_truth(th);
  Thm f = Prim::abs_thm(v, e);
  Thm a = all_instance(v.type, OtTerm::abs(v, th.concl()));
  return Prim::eq_mp(sym(a), f);
}

Thm Exporter::forall_elim(const Thm& th, const OtTerm& witness) {
  const OtTerm& c = th.concl();
  if (!c.is(OtTerm::Kind::App) || !c.fn().is(OtTerm::Kind::Const) || c.fn().name() != kAll) {
    internal("forall_elim: not a universal statement: " + to_string(c));
  }
  const OtTerm& pred = c.arg();
  Thm e = Prim::eq_mp(all_instance(pred.type().dom(), pred), th);
  Thm g = Prim::app_thm(e, Prim::refl(witness));
  Thm h = trans(g, Prim::beta_conv(g.concl().rhs()));
  if (pred.is(OtTerm::Kind::Abs)) h = trans(sym(Prim::beta_conv(g.concl().lhs())), h);
  return Prim::eq_mp(sym(h), truth());
}

Thm Exporter::ty_forall_elim(const Thm& th, const std::string& binder, const OtType& a) {
  Thm cur = th;
  std::string z = binder;
  if (!is_pool_name(z)) {
    z = fresh_type_var();
    cur = Prim::subst({{binder, OtType::var(z)}}, {}, cur);
  }
  return Prim::subst({{z, a}}, {}, cur);
}

Thm Exporter::imp_cong(const Thm& tp, const Thm& tq) {
  if (!tp.concl().is_eq() || !tq.concl().is_eq()) internal("imp_cong: premises must be equations");
  const OtTerm& p = tp.concl().lhs();
  const OtTerm& p2 = tp.concl().rhs();
  const OtTerm& q = tq.concl().lhs();
  const OtTerm& q2 = tq.concl().rhs();
  OtTerm l = OtTerm::apps(Prelude::imp(), {p, q});
  OtTerm r = OtTerm::apps(Prelude::imp(), {p2, q2});
  Thm lr = imp_intro(p2, Prim::eq_mp(tq, imp_elim(Prim::assume(l), Prim::eq_mp(sym(tp), Prim::assume(p2)))));
  Thm rl = imp_intro(p, Prim::eq_mp(sym(tq), imp_elim(Prim::assume(r), Prim::eq_mp(tp, Prim::assume(p)))));
  return Prim::deduct_antisym(rl, lr);
}

Thm Exporter::forall_cong(const OtVar& v, const Thm& th) {
  if (!th.concl().is_eq()) internal("forall_cong: premise must be an equation");
  const OtTerm all = Prelude::all(v.type);
  OtTerm l = OtTerm::app(all, OtTerm::abs(v, th.concl().lhs()));
  OtTerm r = OtTerm::app(all, OtTerm::abs(v, th.concl().rhs()));
  const OtTerm x = OtTerm::var(v);
  Thm lr = forall_intro(v, Prim::eq_mp(th, forall_elim(Prim::assume(l), x)));
  Thm rl = forall_intro(v, Prim::eq_mp(sym(th), forall_elim(Prim::assume(r), x)));
  return Prim::deduct_antisym(rl, lr);
}

const Thm& Exporter::definition_of(const std::string& c) {
  auto it = defs_.find(c);
  if (it != defs_.end()) return it->second.thm;
  const core::CstDefn* d = sig_.definition(c);
  if (!d) throw ExportError(ExportErrc::TraceMismatch, c + " is not a defined constant");
  if (opts_.native_definitions) {
    // Constants in the body must be introduced first.
    std::vector<Term> todo{d->body.body};
    while (!todo.empty()) {
      Term t = todo.back();
      todo.pop_back();
      if (t.is(Term::Kind::Const) && t.name() != c && sig_.definition(t.name())) definition_of(t.name());
      for (std::size_t i = 0; i < t.num_children(); ++i) todo.push_back(t.child(i));
    }
  }
  Definition def;
  def.binders = binder_names(d->body);
  Env env{{}, def.binders};
  OtTerm rhs = term(d->body.body, env);
  if (opts_.native_definitions) {
    def.thm = Prim::define_const(c, rhs);
    definitions_.push_back(def.thm);
  } else {
    OtTerm lhs = OtTerm::cnst(c, type(d->type.body, def.binders));
    def.thm = Prim::axiom({}, OtTerm::eq(lhs, rhs));
  }
  return defs_.emplace(c, std::move(def)).first->second.thm;
}

Thm Exporter::delta(const std::string& c, const std::vector<OtType>& tyargs) {
  Thm th = definition_of(c);
  const auto& binders = defs_.at(c).binders;
  if (binders.size() != tyargs.size()) {
    throw ExportError(ExportErrc::TraceMismatch, c + " unfolded with " + std::to_string(tyargs.size()) +
                                                     " type arguments, expected " + std::to_string(binders.size()));
  }
  if (binders.empty()) return th;
  TypeInst to_fresh;
  TypeInst to_args;
  for (std::size_t i = 0; i < binders.size(); ++i) {
    std::string z = fresh_type_var();
    to_fresh.emplace_back(binders[i], OtType::var(z));
    to_args.emplace_back(z, tyargs[i]);
  }
  return Prim::subst(std::move(to_args), {}, Prim::subst(std::move(to_fresh), {}, th));
}

// ---- conversion ----

Thm Exporter::lift(const Term& cur, const core::Position& path, std::size_t i, Env& env, const Leaf& leaf) {
  if (i == path.size()) return leaf(cur, env);
  const std::uint8_t k = path[i];
  auto mismatch = [&]() -> ExportError {
    return ExportError(ExportErrc::PathMismatch, "no child " + std::to_string(k) + " at depth " + std::to_string(i) +
                                                     " of " + core::to_string(cur));
  };
  switch (cur.kind()) {
    case Term::Kind::App:
      if (k == 0) return Prim::app_thm(lift(cur.fn(), path, i + 1, env, leaf), Prim::refl(term(cur.arg(), env)));
      if (k == 1) return Prim::app_thm(Prim::refl(term(cur.fn(), env)), lift(cur.arg(), path, i + 1, env, leaf));
      throw mismatch();
    case Term::Kind::Imp:
      if (k == 0) return imp_cong(lift(cur.lhs(), path, i + 1, env, leaf), Prim::refl(term(cur.rhs(), env)));
      if (k == 1) return imp_cong(Prim::refl(term(cur.lhs(), env)), lift(cur.rhs(), path, i + 1, env, leaf));
      throw mismatch();
    case Term::Kind::Abs:
    case Term::Kind::Forall: {
      if (k != 0) throw mismatch();
      std::string v = fresh_var(cur.name(), env);
      env.vars.emplace(v, cur.annot());
      Thm th;
      try {
        th = lift(core::open(cur.body(), Term::free(v)), path, i + 1, env, leaf);
      } catch (...) {
        env.vars.erase(v);
        throw;
      }
      env.vars.erase(v);
      OtVar ov{v, type(cur.annot(), env.binders)};
      return cur.is(Term::Kind::Abs) ? Prim::abs_thm(ov, th) : forall_cong(ov, th);
    }
    default:
      throw mismatch();
  }
}

Thm Exporter::congruence(const Term& whole, const core::Position& path, const Env& env, const Leaf& leaf) {
  Env e = env;
  return lift(whole, path, 0, e, leaf);
}

Thm Exporter::congruence(const Thm& step, const core::Position& path, const Term& whole, const Env& env) {
  if (!step.concl().is_eq()) internal("congruence: step is not an equation");
  return congruence(whole, path, env, [&](const Term& sub, const Env& e) {
    if (!alpha_eq(step.concl().lhs(), term(sub, e))) {
      throw ExportError(ExportErrc::PathMismatch, "step rewrites " + to_string(step.concl().lhs()) + " but " +
                                                      core::to_string(sub) + " is at the position");
    }
    return step;
  });
}

Thm Exporter::conv_to_eq(const Term& src, const core::Trace& trace, const Env& env) {
  Env e = env;
  Term cur = src;
  Thm acc = Prim::refl(term(cur, e));
  for (const auto& step : trace.steps) {
    Leaf leaf = [&](const Term& sub, const Env& le) -> Thm {
      if (step.kind == core::RewriteStep::Kind::Beta) {
        if (!sub.is(Term::Kind::App) || !sub.fn().is(Term::Kind::Abs)) {
          throw ExportError(ExportErrc::TraceMismatch, "no beta redex at " + core::to_string(step.position));
        }
        return Prim::beta_conv(term(sub, le));
      }
      if (!sub.is(Term::Kind::Const) || sub.name() != step.constant) {
        throw ExportError(ExportErrc::TraceMismatch, "no occurrence of " + step.constant + " at " +
                                                         core::to_string(step.position));
      }
      std::vector<OtType> args;
      for (const auto& a : sub.tyargs()) args.push_back(type(a, le.binders));
      return delta(step.constant, args);
    };
    Thm st;
    try {
      st = lift(cur, step.position, 0, e, leaf);
    } catch (const ExportError& x) {
      if (x.kind() != ExportErrc::PathMismatch) throw;
      throw ExportError(ExportErrc::TraceMismatch, x.message());
    }
    acc = trans(acc, st);
    try {
      cur = core::apply_step(cur, step, sig_);
    } catch (const core::RewriteError& x) {
      throw ExportError(ExportErrc::TraceMismatch, x.what());
    }
  }
  if (!alpha_eq(acc.concl().rhs(), term(cur, e))) {
    throw ExportError(ExportErrc::TraceMismatch, "trace ends at " + to_string(acc.concl().rhs()));
  }
  return acc;
}

Thm Exporter::conv_eq(const Term& s, const Term& t, const Env& env) {
  auto traces = core::conv(s, t, sig_, opts_.fuel);
  if (!traces) {
    throw ExportError(ExportErrc::TraceMismatch, core::to_string(s) + " and " + core::to_string(t) +
                                                     " are not convertible");
  }
  Thm l = conv_to_eq(s, traces->first, env);
  if (traces->second.empty()) return l;
  return trans(l, sym(conv_to_eq(t, traces->second, env)));
}

// ---- proofs ----

PolyThm Exporter::translate_proof(const ProofTerm& p, Env& env) {
  switch (p.kind()) {
    case ProofTerm::Kind::Assume:
      return in_phase("connectives", [&] { return PolyThm{Prim::assume(term(p.term(), env)), {}}; });
    case ProofTerm::Kind::ImpIntro: {
      PolyThm b = translate_proof(p.body(), env);
      return in_phase("connectives", [&] { return PolyThm{imp_intro(term(p.term(), env), b.thm), {}}; });
    }
    case ProofTerm::Kind::ImpElim: {
      PolyThm f = translate_proof(p.body(), env);
      PolyThm a = translate_proof(p.arg(), env);
      return in_phase("connectives", [&] { return PolyThm{imp_elim(f.thm, a.thm), {}}; });
    }
    case ProofTerm::Kind::ForallIntro: {
      if (env.vars.count(p.name())) {
        throw ExportError(ExportErrc::FreshnessViolation, p.name() + " is already in scope", "connectives");
      }
      env.vars.emplace(p.name(), p.type());
      PolyThm b;
      try {
        b = translate_proof(p.body(), env);
      } catch (...) {
        env.vars.erase(p.name());
        throw;
      }
      env.vars.erase(p.name());
      return in_phase("connectives",
                      [&] { return PolyThm{forall_intro({p.name(), type(p.type())}, b.thm), {}}; });
    }
    case ProofTerm::Kind::ForallElim: {
      PolyThm b = translate_proof(p.body(), env);
      return in_phase("connectives", [&] { return PolyThm{forall_elim(b.thm, term(p.term(), env)), {}}; });
    }
    case ProofTerm::Kind::TyForallIntro: {
      PolyThm b = translate_proof(p.body(), env);
      b.binders.insert(b.binders.begin(), type_var_name(p.name()));
      return b;
    }
    case ProofTerm::Kind::TyForallElim: {
      PolyThm b = translate_proof(p.body(), env);
      return in_phase("detype", [&] {
        if (b.binders.empty()) internal("type instantiation of a monomorphic conclusion");
        Thm th = ty_forall_elim(b.thm, b.binders.front(), type(p.type()));
        return PolyThm{th, std::vector<std::string>(b.binders.begin() + 1, b.binders.end())};
      });
    }
    case ProofTerm::Kind::Conv: {
      PolyThm b = translate_proof(p.body(), env);
      return in_phase("conversion", [&] {
        const core::PolyTerm* src = p.body().conclusion();
        if (!src) internal("Conv over an unelaborated proof");
        const core::PolyTerm& tgt = p.target();
        if (src->binders.size() != tgt.binders.size() || src->binders.size() != b.binders.size()) {
          internal("Conv changes the number of type binders");
        }
        if (src->body == tgt.body) return b;
        Env e = env;
        e.binders = b.binders;
        return PolyThm{conv(b.thm, conv_eq(src->body, tgt.body, e)), b.binders};
      });
    }
    case ProofTerm::Kind::Ref: {
      auto it = facts_.find(p.name());
      if (it == facts_.end()) internal("reference to unknown fact " + p.name());
      const PolyThm& f = it->second;
      if (f.binders.empty()) return f;
      return in_phase("detype", [&] {
        TypeInst ren;
        std::vector<std::string> zs;
        for (const auto& b : f.binders) {
          zs.push_back(fresh_type_var());
          ren.emplace_back(b, OtType::var(zs.back()));
        }
        return PolyThm{Prim::subst(std::move(ren), {}, f.thm), zs};
      });
    }
  }
  internal("unreachable");
}

namespace {

Env theorem_env(const kernel::Theorem& th, std::set<std::string>& tyvars, const Exporter& ex) {
  Env env;
  for (const auto& e : th.ctx.entries()) {
    if (e.type) {
      env.vars[e.name] = *e.type;
    } else {
      tyvars.insert(ex.type_var_name(e.name));
    }
  }
  for (const auto& v : th.tyvars) tyvars.insert(ex.type_var_name(v));
  return env;
}

}  // namespace

Sequent Exporter::translate_statement(const kernel::Theorem& th) const {
  std::set<std::string> tyvars;
  Env env = theorem_env(th, tyvars, *this);
  Sequent s;
  for (const auto& h : th.hyps) {
    OtTerm x = term(h, env);
    if (!has_hyp(s.hyps, x)) s.hyps.push_back(x);
  }
  env.binders = binder_names(th.concl, tyvars);
  s.concl = term(th.concl.body, env);
  return s;
}

Thm Exporter::translate_theorem(const kernel::Theorem& th) {
  std::set<std::string> tyvars;
  Env env = theorem_env(th, tyvars, *this);
  PolyThm r = translate_proof(th.proof, env);
  return in_phase("detype", [&] {
    std::vector<std::string> canon = binder_names(th.concl, tyvars);
    if (canon.size() != r.binders.size()) internal("binder count differs from the statement");
    Thm out = r.thm;
    TypeInst ren;
    for (std::size_t i = 0; i < canon.size(); ++i) {
      if (r.binders[i] != canon[i]) ren.emplace_back(r.binders[i], OtType::var(canon[i]));
    }
    if (!ren.empty()) out = Prim::subst(std::move(ren), {}, out);
    Sequent want = translate_statement(th);
    if (!alpha_eq(out.concl(), want.concl)) {
      internal("translated conclusion " + to_string(out.concl()) + " differs from " + to_string(want.concl));
    }
    for (const auto& h : out.hyps()) {
      if (!has_hyp(want.hyps, h)) internal("stray hypothesis " + to_string(h));
    }
    return out;
  });
}

void Exporter::add_axiom(const std::string& name, const core::PolyTerm& statement) {
  std::vector<std::string> binders = binder_names(statement);
  Env env{{}, binders};
  Thm th = Prim::axiom({}, term(statement.body, env));
  facts_[name] = {th, binders};
  add_export(opts_.theory + "." + name, th);
}

void Exporter::add_theorem(const std::string& name, const kernel::Theorem& th) {
  Thm t = translate_theorem(th);
  std::set<std::string> tyvars;
  theorem_env(th, tyvars, *this);
  facts_[name] = {t, binder_names(th.concl, tyvars)};
  add_export(opts_.theory + "." + name, t);
}

void Exporter::add_theory(const kernel::Theory& th) {
  for (const auto& item : th.order()) {
    if (item.is_fact) {
      const kernel::Fact& f = th.facts()[item.index];
      if (f.is_axiom()) {
        add_axiom(f.name, f.statement);
      } else {
        add_theorem(f.name, *f.theorem);
      }
      continue;
    }
    const core::SigEntry& e = th.signature().entries()[item.index];
    if (const auto* d = std::get_if<core::CstDefn>(&e)) {
      add_export(opts_.theory + "." + d->name + "_def", definition_of(d->name));
    }
  }
}

void Exporter::add_export(const std::string& name, const Thm& th) { exports_.push_back({name, th}); }

std::string Exporter::write_article() const { return exporter::write_article(definitions_, exports_); }

}  // namespace sttx::ot::exporter
