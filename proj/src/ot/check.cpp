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

#include "sttx/ot/check.hpp"

#include <charconv>
#include <memory>
#include <optional>
#include <set>
#include <variant>

#include "json.hpp"

namespace sttx::ot::check {

std::string_view to_string(CheckErrc e) {
  switch (e) {
    case CheckErrc::ParseError:
      return "ParseError";
    case CheckErrc::StackUnderflow:
      return "StackUnderflow";
    case CheckErrc::TypeErrorInRule:
      return "TypeErrorInRule";
    case CheckErrc::UnknownCommand:
      return "UnknownCommand";
    case CheckErrc::DanglingDictionaryRef:
      return "DanglingDictionaryRef";
  }
  return "?";
}

namespace {

[[noreturn]] void rule_error(const char* rule, const std::string& msg) {
  throw CheckError(CheckErrc::TypeErrorInRule, msg, 0, rule);
}

// ---- term operations, private to the checker ----

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string n = base;
  while (avoid.count(n)) n += '\'';
  return n;
}

void free_names(const OtTerm& t, std::set<std::string>& out) {
  for (const auto& v : free_vars(t)) out.insert(v.name);
}

OtType inst_ty(const OtType& t, const TypeSubst& s) {
  if (s.empty()) return t;
  if (t.is_var()) {
    auto it = s.find(t.name());
    return it == s.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<OtType> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(inst_ty(a, s));
  return OtType::op(t.name(), std::move(args));
}

using VarMap = std::map<OtVar, OtTerm>;

OtTerm vsubst(const OtTerm& t, const VarMap& m) {
  if (m.empty()) return t;
  switch (t.kind()) {
    case OtTerm::Kind::Var: {
      auto it = m.find({t.name(), t.type()});
      return it == m.end() ? t : it->second;
    }
    case OtTerm::Kind::Const:
      return t;
    case OtTerm::Kind::App: {
      OtTerm f = vsubst(t.fn(), m);
      OtTerm a = vsubst(t.arg(), m);
      if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
      return OtTerm::app(std::move(f), std::move(a));
    }
    case OtTerm::Kind::Abs: {
      OtVar v = t.bound();
      VarMap rel;
      for (const auto& [w, img] : m) {
        if (!(w == v) && occurs_free(w, t.body())) rel.emplace(w, img);
      }
      if (rel.empty()) return t;
      bool capture = false;
      for (const auto& [w, img] : rel) capture = capture || occurs_free(v, img);
      if (capture) {
        std::set<std::string> avoid;
        free_names(t.body(), avoid);
        for (const auto& [w, img] : rel) free_names(img, avoid);
        OtVar nv{fresh_name(v.name, avoid), v.type};
        rel[v] = OtTerm::var(nv);
        return OtTerm::abs(nv, vsubst(t.body(), rel));
      }
      return OtTerm::abs(v, vsubst(t.body(), rel));
    }
  }
  return t;
}

OtTerm inst_tm(const OtTerm& t, const TypeSubst& s) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case OtTerm::Kind::Var:
      return OtTerm::var(t.name(), inst_ty(t.type(), s));
    case OtTerm::Kind::Const:
      return OtTerm::cnst(t.name(), inst_ty(t.type(), s));
    case OtTerm::Kind::App:
      return OtTerm::app(inst_tm(t.fn(), s), inst_tm(t.arg(), s));
    case OtTerm::Kind::Abs: {
      OtVar v = t.bound();
      OtTerm body = t.body();
      OtType vt = inst_ty(v.type, s);
      bool clash = false;
      for (const auto& w : free_vars(body)) {
        if (!(w == v) && w.name == v.name && inst_ty(w.type, s) == vt) clash = true;
      }
      if (clash) {
        std::set<std::string> avoid;
        free_names(body, avoid);
        avoid.insert(v.name);
        OtVar nv{fresh_name(v.name, avoid), v.type};
        body = vsubst(body, {{v, OtTerm::var(nv)}});
        v = nv;
      }
      return OtTerm::abs({v.name, vt}, inst_tm(body, s));
    }
  }
  return t;
}

bool is_bool(const OtTerm& t) { return t.type().is_bool(); }

void add_hyp(std::vector<OtTerm>& hyps, const OtTerm& h) {
  if (!has_hyp(hyps, h)) hyps.push_back(h);
}

std::vector<OtTerm> union_hyps(const std::vector<OtTerm>& a, const std::vector<OtTerm>& b) {
  std::vector<OtTerm> out = a;
  for (const auto& h : b) add_hyp(out, h);
  return out;
}

std::vector<OtTerm> remove_hyp(const std::vector<OtTerm>& a, const OtTerm& p) {
  std::vector<OtTerm> out;
  for (const auto& h : a) {
    if (!alpha_eq(h, p)) out.push_back(h);
  }
  return out;
}

const OtTerm& need_eq(const OtTerm& t, const char* rule) {
  if (!t.is_eq()) rule_error(rule, "expected an equation, got " + to_string(t));
  return t;
}

bool match_type(const OtType& pat, const OtType& inst, TypeSubst& s) {
  if (pat.is_var()) {
    auto [it, fresh] = s.emplace(pat.name(), inst);
    return fresh || it->second == inst;
  }
  if (inst.is_var() || pat.name() != inst.name() || pat.args().size() != inst.args().size()) return false;
  for (std::size_t i = 0; i < pat.args().size(); ++i) {
    if (!match_type(pat.args()[i], inst.args()[i], s)) return false;
  }
  return true;
}

}  // namespace

// ---- rules ----

KernelTheorem Rules::assume(const OtTerm& p) {
  if (!is_bool(p)) rule_error("assume", "not a proposition: " + to_string(p));
  return KernelTheorem({{p}, p}, "assume");
}

KernelTheorem Rules::refl(const OtTerm& t) { return KernelTheorem({{}, OtTerm::eq(t, t)}, "refl"); }

KernelTheorem Rules::app_thm(const KernelTheorem& fg, const KernelTheorem& xy) {
  const OtTerm& e1 = need_eq(fg.concl(), "appThm");
  const OtTerm& e2 = need_eq(xy.concl(), "appThm");
  try {
    OtTerm l = OtTerm::app(e1.lhs(), e2.lhs());
    OtTerm r = OtTerm::app(e1.rhs(), e2.rhs());
    return KernelTheorem({union_hyps(fg.hyps(), xy.hyps()), OtTerm::eq(l, r)}, "appThm");
  } catch (const OtTypeError& e) {
    rule_error("appThm", e.what());
  }
}

KernelTheorem Rules::abs_thm(const OtVar& v, const KernelTheorem& th) {
  const OtTerm& e = need_eq(th.concl(), "absThm");
  for (const auto& h : th.hyps()) {
    if (occurs_free(v, h)) rule_error("absThm", v.name + " is free in hypothesis " + to_string(h));
  }
  return KernelTheorem({th.hyps(), OtTerm::eq(OtTerm::abs(v, e.lhs()), OtTerm::abs(v, e.rhs()))}, "absThm");
}

KernelTheorem Rules::beta_conv(const OtTerm& redex) {
  if (!redex.is(OtTerm::Kind::App) || !redex.fn().is(OtTerm::Kind::Abs)) {
    rule_error("betaConv", "not a beta redex: " + to_string(redex));
  }
  const OtTerm& f = redex.fn();
  OtTerm reduct = vsubst(f.body(), {{f.bound(), redex.arg()}});
  return KernelTheorem({{}, OtTerm::eq(redex, reduct)}, "betaConv");
}

KernelTheorem Rules::subst(const TypeSubst& tys, const TermSubst& tms, const KernelTheorem& th) {
  VarMap m;
  for (const auto& [v, img] : tms) {
    OtVar iv{v.name, inst_ty(v.type, tys)};
    if (!(iv.type == img.type())) {
      rule_error("subst", "variable " + v.name + " : " + to_string(iv.type) + " mapped to " + to_string(img) +
                              " : " + to_string(img.type()));
    }
    m.insert_or_assign(iv, img);
  }
  auto apply = [&](const OtTerm& t) { return vsubst(inst_tm(t, tys), m); };
  std::vector<OtTerm> hyps;
  for (const auto& h : th.hyps()) add_hyp(hyps, apply(h));
  return KernelTheorem({std::move(hyps), apply(th.concl())}, "subst");
}

KernelTheorem Rules::eq_mp(const KernelTheorem& eq, const KernelTheorem& th) {
  const OtTerm& e = need_eq(eq.concl(), "eqMp");
  if (!alpha_eq(e.lhs(), th.concl())) {
    rule_error("eqMp", "left side " + to_string(e.lhs()) + " does not match " + to_string(th.concl()));
  }
  return KernelTheorem({union_hyps(eq.hyps(), th.hyps()), e.rhs()}, "eqMp");
}

KernelTheorem Rules::deduct_antisym(const KernelTheorem& a, const KernelTheorem& b) {
  std::vector<OtTerm> hyps = union_hyps(remove_hyp(a.hyps(), b.concl()), remove_hyp(b.hyps(), a.concl()));
  return KernelTheorem({std::move(hyps), OtTerm::eq(a.concl(), b.concl())}, "deductAntisym");
}

KernelTheorem Rules::prove_hyp(const KernelTheorem& hyp, const KernelTheorem& th) {
  return KernelTheorem({union_hyps(hyp.hyps(), remove_hyp(th.hyps(), hyp.concl())), th.concl()}, "proveHyp");
}

KernelTheorem Rules::axiom(std::vector<OtTerm> hyps, const OtTerm& concl) {
  std::vector<OtTerm> hs;
  for (const auto& h : hyps) {
    if (!is_bool(h)) rule_error("axiom", "hypothesis is not a proposition: " + to_string(h));
    add_hyp(hs, h);
  }
  if (!is_bool(concl)) rule_error("axiom", "not a proposition: " + to_string(concl));
  return KernelTheorem({std::move(hs), concl}, "axiom");
}

KernelTheorem Rules::define_const(const std::string& name, const OtTerm& t) {
  if (name == kEq) rule_error("defineConst", "cannot define equality");
  if (!free_vars(t).empty()) rule_error("defineConst", "definition has free variables: " + to_string(t));
  std::set<std::string> tv;
  std::set<std::string> tyv;
  type_vars(t, tv);
  type_vars(t.type(), tyv);
  if (tv != tyv) rule_error("defineConst", "type variables of the body do not all occur in its type");
  return KernelTheorem({{}, OtTerm::eq(OtTerm::cnst(name, t.type()), t)}, "defineConst");
}

std::pair<KernelTheorem, KernelTheorem> Rules::define_type_op(const std::string& op, const std::string& abs,
                                                              const std::string& rep,
                                                              const std::vector<std::string>& tyvars,
                                                              const KernelTheorem& witness) {
  const char* rule = "defineTypeOp";
  if (!witness.hyps().empty()) rule_error(rule, "witness theorem has hypotheses");
  const OtTerm& c = witness.concl();
  if (!c.is(OtTerm::Kind::App)) rule_error(rule, "witness is not of the form phi t");
  const OtTerm& phi = c.fn();
  const OtTerm& t = c.arg();
  if (!free_vars(phi).empty() || !free_vars(t).empty()) rule_error(rule, "witness has free variables");
  std::set<std::string> seen(tyvars.begin(), tyvars.end());
  if (seen.size() != tyvars.size()) rule_error(rule, "repeated type variable");
  std::set<std::string> tv;
  type_vars(phi, tv);
  for (const auto& v : tv) {
    if (!seen.count(v)) rule_error(rule, "type variable " + v + " is not a parameter");
  }
  std::vector<OtType> args;
  for (const auto& v : tyvars) args.push_back(OtType::var(v));
  OtType a = t.type();
  OtType ty = OtType::op(op, std::move(args));
  OtTerm absc = OtTerm::cnst(abs, OtType::fun(a, ty));
  OtTerm repc = OtTerm::cnst(rep, OtType::fun(ty, a));
  OtTerm av = OtTerm::var("a", ty);
  OtTerm rv = OtTerm::var("r", a);
  KernelTheorem th1({{}, OtTerm::eq(OtTerm::app(absc, OtTerm::app(repc, av)), av)}, rule);
  KernelTheorem th2({{}, OtTerm::eq(OtTerm::app(phi, rv), OtTerm::eq(OtTerm::app(repc, OtTerm::app(absc, rv)), rv))},
                    rule);
  return {std::move(th1), std::move(th2)};
}

// ---- virtual machine ----

namespace {

struct Object;
using List = std::shared_ptr<const std::vector<Object>>;

struct Num {
  long long value;
};
struct Name {
  std::string value;
};
struct TypeOpObj {
  std::string name;
};
struct ConstObj {
  std::string name;
};

struct Object {
  std::variant<Num, Name, TypeOpObj, OtType, ConstObj, OtVar, OtTerm, KernelTheorem, List> v;
};

const char* kind_name(const Object& o) {
  static const char* names[] = {"number", "name", "type operator", "type", "constant", "variable", "term", "theorem",
                                "list"};
  return names[o.v.index()];
}

struct Vm {
  std::vector<Object> stack;
  std::map<long long, Object> dict;
  ArticleResult result;
  std::size_t line = 0;
  std::string cmd;
  std::optional<std::string> pending_name;

  // Fixed arities of type operators seen so far.
  std::map<std::string, std::size_t> arity{{kBool, 0}, {kFun, 2}};
  // Constants introduced by definitions, with their generic types.
  std::map<std::string, OtType> defined;
  std::set<std::string> referenced;

  [[noreturn]] void fail(CheckErrc k, const std::string& msg) { throw CheckError(k, msg, line, cmd); }

  Object pop() {
    if (stack.empty()) fail(CheckErrc::StackUnderflow, "empty stack");
    Object o = std::move(stack.back());
    stack.pop_back();
    return o;
  }

  template <class T>
  T pop_as(const char* what) {
    Object o = pop();
    if (auto* x = std::get_if<T>(&o.v)) return std::move(*x);
    fail(CheckErrc::TypeErrorInRule, std::string("expected ") + what + ", found " + kind_name(o));
  }

  void push(Object o) { stack.push_back(std::move(o)); }
  template <class T>
  void push_v(T x) {
    stack.push_back(Object{std::move(x)});
  }

  template <class T>
  std::vector<T> list_of(const List& l, const char* what) {
    std::vector<T> out;
    for (const auto& o : *l) {
      if (const auto* x = std::get_if<T>(&o.v)) {
        out.push_back(*x);
      } else {
        fail(CheckErrc::TypeErrorInRule, std::string("expected a list of ") + what + ", found " + kind_name(o));
      }
    }
    return out;
  }

  long long key() {
    long long k = pop_as<Num>("a number").value;
    if (k < 0) fail(CheckErrc::TypeErrorInRule, "negative dictionary key");
    return k;
  }

  template <class F>
  auto rule(F&& f) {
    try {
      return f();
    } catch (const CheckError& e) {
      if (e.line() != 0) throw;
      throw CheckError(e.kind(), e.message(), line, e.rule().empty() ? cmd : e.rule());
    } catch (const OtTypeError& e) {
      fail(CheckErrc::TypeErrorInRule, e.what());
    }
  }

  void exec(const std::string& c);
};

void Vm::exec(const std::string& c) {
  if (c == "absTerm") {
    OtTerm b = pop_as<OtTerm>("a term");
    OtVar v = pop_as<OtVar>("a variable");
    push_v(OtTerm::abs(std::move(v), std::move(b)));
  } else if (c == "absThm") {
    KernelTheorem th = pop_as<KernelTheorem>("a theorem");
    OtVar v = pop_as<OtVar>("a variable");
    push_v(rule([&] { return Rules::abs_thm(v, th); }));
  } else if (c == "appTerm") {
    OtTerm x = pop_as<OtTerm>("a term");
    OtTerm f = pop_as<OtTerm>("a term");
    push_v(rule([&] { return OtTerm::app(f, x); }));
  } else if (c == "appThm") {
    KernelTheorem b = pop_as<KernelTheorem>("a theorem");
    KernelTheorem a = pop_as<KernelTheorem>("a theorem");
    push_v(rule([&] { return Rules::app_thm(a, b); }));
  } else if (c == "assume") {
    OtTerm p = pop_as<OtTerm>("a term");
    push_v(rule([&] { return Rules::assume(p); }));
  } else if (c == "axiom") {
    OtTerm p = pop_as<OtTerm>("a term");
    std::vector<OtTerm> hyps = list_of<OtTerm>(pop_as<List>("a list"), "terms");
    KernelTheorem th = rule([&] { return Rules::axiom(hyps, p); });
    result.assumed.push_back(th.sequent());
    push_v(std::move(th));
  } else if (c == "betaConv") {
    OtTerm t = pop_as<OtTerm>("a term");
    push_v(rule([&] { return Rules::beta_conv(t); }));
  } else if (c == "cons") {
    List tail = pop_as<List>("a list");
    Object head = pop();
    auto l = std::make_shared<std::vector<Object>>();
    l->reserve(tail->size() + 1);
    l->push_back(std::move(head));
    l->insert(l->end(), tail->begin(), tail->end());
    push_v(List(std::move(l)));
  } else if (c == "const") {
    std::string n = pop_as<Name>("a name").value;
    referenced.insert(n);
    push_v(ConstObj{std::move(n)});
  } else if (c == "constTerm") {
    OtType ty = pop_as<OtType>("a type");
    ConstObj k = pop_as<ConstObj>("a constant");
    if (k.name == kEq) {
      if (!ty.is_fun() || !ty.cod().is_fun() || !(ty.dom() == ty.cod().dom()) || !ty.cod().cod().is_bool()) {
        fail(CheckErrc::TypeErrorInRule, "equality at type " + to_string(ty));
      }
    }
    auto it = defined.find(k.name);
    if (it != defined.end()) {
      TypeSubst s;
      if (!match_type(it->second, ty, s)) {
        fail(CheckErrc::TypeErrorInRule, k.name + " used at " + to_string(ty) + ", not an instance of " +
                                             to_string(it->second));
      }
    }
    push_v(OtTerm::cnst(k.name, ty));
  } else if (c == "def") {
    long long k = key();
    if (stack.empty()) fail(CheckErrc::StackUnderflow, "empty stack");
    dict.insert_or_assign(k, stack.back());
  } else if (c == "deductAntisym") {
    KernelTheorem b = pop_as<KernelTheorem>("a theorem");
    KernelTheorem a = pop_as<KernelTheorem>("a theorem");
    push_v(rule([&] { return Rules::deduct_antisym(a, b); }));
  } else if (c == "defineConst") {
    OtTerm t = pop_as<OtTerm>("a term");
    std::string n = pop_as<Name>("a name").value;
    if (defined.count(n) || referenced.count(n)) fail(CheckErrc::TypeErrorInRule, "constant " + n + " already exists");
    KernelTheorem th = rule([&] { return Rules::define_const(n, t); });
    defined.emplace(n, t.type());
    result.defined_constants.push_back(n);
    push_v(ConstObj{n});
    push_v(std::move(th));
  } else if (c == "defineTypeOp") {
    KernelTheorem w = pop_as<KernelTheorem>("a theorem");
    std::vector<Name> tvs = list_of<Name>(pop_as<List>("a list"), "names");
    std::string rep = pop_as<Name>("a name").value;
    std::string abs = pop_as<Name>("a name").value;
    std::string op = pop_as<Name>("a name").value;
    std::vector<std::string> names;
    for (auto& n : tvs) names.push_back(std::move(n.value));
    if (arity.count(op)) fail(CheckErrc::TypeErrorInRule, "type operator " + op + " already exists");
    for (const auto& n : {abs, rep}) {
      if (defined.count(n) || referenced.count(n) || n == kEq) {
        fail(CheckErrc::TypeErrorInRule, "constant " + n + " already exists");
      }
    }
    auto [th1, th2] = rule([&] { return Rules::define_type_op(op, abs, rep, names, w); });
    arity[op] = names.size();
    const OtTerm& absc = th1.concl().lhs().fn();
    const OtTerm& repc = th1.concl().lhs().arg().fn();
    defined.emplace(abs, absc.type());
    defined.emplace(rep, repc.type());
    result.defined_type_ops.push_back(op);
    result.defined_constants.push_back(abs);
    result.defined_constants.push_back(rep);
    push_v(TypeOpObj{op});
    push_v(ConstObj{abs});
    push_v(ConstObj{rep});
    push_v(std::move(th1));
    push_v(std::move(th2));
  } else if (c == "eqMp") {
    KernelTheorem b = pop_as<KernelTheorem>("a theorem");
    KernelTheorem a = pop_as<KernelTheorem>("a theorem");
    push_v(rule([&] { return Rules::eq_mp(a, b); }));
  } else if (c == "nil") {
    push_v(List(std::make_shared<std::vector<Object>>()));
  } else if (c == "opType") {
    std::vector<OtType> args = list_of<OtType>(pop_as<List>("a list"), "types");
    TypeOpObj op = pop_as<TypeOpObj>("a type operator");
    auto [it, fresh] = arity.emplace(op.name, args.size());
    if (!fresh && it->second != args.size()) {
      fail(CheckErrc::TypeErrorInRule, op.name + " applied to " + std::to_string(args.size()) +
                                           " arguments, arity " + std::to_string(it->second));
    }
    push_v(OtType::op(op.name, std::move(args)));
  } else if (c == "pop") {
    pop();
  } else if (c == "proveHyp") {
    KernelTheorem b = pop_as<KernelTheorem>("a theorem");
    KernelTheorem a = pop_as<KernelTheorem>("a theorem");
    push_v(rule([&] { return Rules::prove_hyp(a, b); }));
  } else if (c == "ref" || c == "remove") {
    long long k = key();
    auto it = dict.find(k);
    if (it == dict.end()) fail(CheckErrc::DanglingDictionaryRef, "no entry " + std::to_string(k));
    push(it->second);
    if (c == "remove") dict.erase(it);
  } else if (c == "refl") {
    OtTerm t = pop_as<OtTerm>("a term");
    push_v(Rules::refl(t));
  } else if (c == "subst") {
    KernelTheorem th = pop_as<KernelTheorem>("a theorem");
    List sigma = pop_as<List>("a list");
    if (sigma->size() != 2) fail(CheckErrc::TypeErrorInRule, "substitution must be a pair of lists");
    TypeSubst tys;
    TermSubst tms;
    auto pairs = [&](const Object& o) {
      const auto* l = std::get_if<List>(&o.v);
      if (!l) fail(CheckErrc::TypeErrorInRule, "substitution component is not a list");
      std::vector<List> out;
      for (const auto& p : **l) {
        const auto* pl = std::get_if<List>(&p.v);
        if (!pl || (*pl)->size() != 2) fail(CheckErrc::TypeErrorInRule, "substitution entry is not a pair");
        out.push_back(*pl);
      }
      return out;
    };
    for (const auto& p : pairs((*sigma)[0])) {
      const auto* n = std::get_if<Name>(&(*p)[0].v);
      const auto* t = std::get_if<OtType>(&(*p)[1].v);
      if (!n || !t) fail(CheckErrc::TypeErrorInRule, "type substitution entry must be [name, type]");
      tys.insert_or_assign(n->value, *t);
    }
    for (const auto& p : pairs((*sigma)[1])) {
      const auto* v = std::get_if<OtVar>(&(*p)[0].v);
      const auto* t = std::get_if<OtTerm>(&(*p)[1].v);
      if (!v || !t) fail(CheckErrc::TypeErrorInRule, "term substitution entry must be [var, term]");
      tms.emplace_back(*v, *t);
    }
    push_v(rule([&] { return Rules::subst(tys, tms, th); }));
  } else if (c == "thm") {
    OtTerm phi = pop_as<OtTerm>("a term");
    std::vector<OtTerm> hyps = list_of<OtTerm>(pop_as<List>("a list"), "terms");
    KernelTheorem th = pop_as<KernelTheorem>("a theorem");
    Sequent want;
    for (const auto& h : hyps) add_hyp(want.hyps, h);
    want.concl = phi;
    if (!alpha_eq(want, th.sequent())) {
      fail(CheckErrc::TypeErrorInRule, "theorem " + to_string(th.sequent()) + " does not match " + to_string(want));
    }
    std::string name = pending_name ? *pending_name : "thm" + std::to_string(result.exported.size());
    pending_name.reset();
    result.exported.push_back({std::move(name), std::move(want)});
  } else if (c == "typeOp") {
    push_v(TypeOpObj{pop_as<Name>("a name").value});
  } else if (c == "var") {
    OtType ty = pop_as<OtType>("a type");
    std::string n = pop_as<Name>("a name").value;
    push_v(OtVar{std::move(n), std::move(ty)});
  } else if (c == "varTerm") {
    push_v(OtTerm::var(pop_as<OtVar>("a variable")));
  } else if (c == "varType") {
    push_v(OtType::var(pop_as<Name>("a name").value));
  } else if (c == "version") {
    long long v = pop_as<Num>("a number").value;
    if (v != 6) fail(CheckErrc::TypeErrorInRule, "unsupported article version " + std::to_string(v));
  } else {
    fail(CheckErrc::UnknownCommand, "unknown command '" + c + "'");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

ArticleResult run_article(std::string_view text) {
  Vm vm;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view ln = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++vm.line;
    if (ln.empty()) continue;
    if (ln.front() == '#') {
      std::string_view c = trim(ln.substr(1));
      if (!c.empty()) vm.pending_name = std::string(c);
      continue;
    }
    ++vm.result.commands;
    if (ln.front() == '"') {
      vm.cmd.clear();
      if (ln.size() < 2 || ln.back() != '"') vm.fail(CheckErrc::ParseError, "unterminated name");
      std::string n;
      for (std::size_t i = 1; i + 1 < ln.size(); ++i) {
        if (ln[i] == '\\') {
          if (i + 2 >= ln.size()) vm.fail(CheckErrc::ParseError, "dangling escape in name");
          n += ln[++i];
        } else if (ln[i] == '"') {
          vm.fail(CheckErrc::ParseError, "unescaped quote in name");
        } else {
          n += ln[i];
        }
      }
      vm.push_v(Name{std::move(n)});
      continue;
    }
    if (ln.front() == '-' || (ln.front() >= '0' && ln.front() <= '9')) {
      vm.cmd.clear();
      long long v = 0;
      auto [p, ec] = std::from_chars(ln.data(), ln.data() + ln.size(), v);
      if (ec != std::errc() || p != ln.data() + ln.size()) vm.fail(CheckErrc::ParseError, "bad number");
      vm.push_v(Num{v});
      continue;
    }
    std::string c(ln);
    vm.cmd.clear();
    for (char ch : c) {
      if (!((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z'))) {
        vm.fail(CheckErrc::ParseError, "malformed line '" + c + "'");
      }
    }
    vm.cmd = c;
    vm.exec(c);
  }
  vm.result.leftover_stack = vm.stack.size();
  return std::move(vm.result);
}

std::string report_json(const ArticleResult& result, const CheckError* error) {
  nlohmann::ordered_json j;
  j["ok"] = error == nullptr;
  nlohmann::ordered_json thms = nlohmann::ordered_json::array();
  for (const auto& t : result.exported) {
    thms.push_back({{"name", t.name}, {"sequent", to_string(t.sequent)}, {"status", "verified"}});
  }
  j["theorems"] = std::move(thms);
  nlohmann::ordered_json ax = nlohmann::ordered_json::array();
  for (const auto& s : result.assumed) ax.push_back(to_string(s));
  j["assumptions"] = std::move(ax);
  j["defined_constants"] = result.defined_constants;
  j["defined_type_ops"] = result.defined_type_ops;
  j["commands"] = result.commands;
  j["leftover_stack"] = result.leftover_stack;
  if (error) {
    j["error"] = {{"kind", std::string(to_string(error->kind()))},
                  {"line", error->line()},
                  {"rule", error->rule()},
                  {"message", error->what()}};
  }
  return j.dump(2);
}

}  // namespace sttx::ot::check
