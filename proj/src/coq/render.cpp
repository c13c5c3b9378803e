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

#include "sttx/coq/render.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "sttx/version.hpp"

namespace sttx::coq {

using core::MonoType;
using core::PolyTerm;
using core::PolyType;
using core::Term;
using kernel::ProofTerm;

namespace {

const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> k = {
      "_",          "as",      "at",         "cofix",     "else",      "end",        "exists",   "exists2",
      "fix",        "for",     "forall",     "fun",       "if",        "IF",         "in",       "let",
      "match",      "mod",     "Prop",       "return",    "Set",       "SProp",      "then",     "Type",
      "using",      "where",   "with",       "Axiom",     "Parameter", "Definition", "Theorem",  "Lemma",
      "Fixpoint",   "Inductive", "Module",   "End",       "Import",    "Export",     "Require",  "Section",
      "Variable",   "Hypothesis", "Proof",   "Qed",       "Defined",   "Check",      "Print",    "Notation",
      "Local",      "Global",  "Open",       "Scope",     "Include",   "Declare",    "Context",  "Record",
      "Structure",  "Class",   "Instance",   "Example",   "Fact",      "Remark",     "Corollary", "Let",
      "CoFixpoint", "CoInductive"};
  return k;
}

// Reserved in every rendering: module parameter and Coq's equality.
const std::set<std::string> kReserved = {"M", "eq"};

enum Level { kAtom = 0, kApp = 1, kEq = 2, kArrow = 3, kBinder = 4 };

struct Doc {
  std::string s;
  int level = kAtom;
};

std::string paren(const Doc& d, int max) { return d.level > max ? "(" + d.s + ")" : d.s; }

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

bool is_keyword(std::string_view s) { return keywords().count(s) > 0; }

std::string sanitize(std::string_view name) {
  std::string out;
  for (char c : name) out += ident_char(c) ? c : '_';
  if (out.empty() || !ident_start(out[0])) out = "c_" + out;
  if (out == "_" || is_keyword(out)) out += '_';
  return out;
}

// ---- Names ----

Names::Names(std::set<std::string> reserved) : taken_(std::move(reserved)) {
  for (const auto& k : keywords()) taken_.insert(k);
}

const std::string& Names::add(const std::string& name) {
  auto it = map_.find(name);
  if (it != map_.end()) return it->second;
  std::string base = sanitize(name);
  std::string id = base;
  for (std::size_t k = 1; taken_.count(id); ++k) id = base + "_" + std::to_string(k);
  taken_.insert(id);
  order_.push_back(name);
  return map_.emplace(name, id).first->second;
}

std::string Names::operator()(const std::string& name) const {
  auto it = map_.find(name);
  return it == map_.end() ? sanitize(name) : it->second;
}

std::vector<std::pair<std::string, std::string>> Names::renamed() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& n : order_) {
    const std::string& id = map_.at(n);
    if (id != n) out.emplace_back(n, id);
  }
  return out;
}

// ---- Renderer ----

struct Renderer::Scope {
  const Renderer& r;
  std::set<std::string> used;
  std::vector<std::string> ty_bound;
  std::map<std::string, std::string> ty_free;
  std::vector<std::string> tm_bound;
  std::map<std::string, std::string> tm_free;
  std::vector<std::pair<std::string, Term>> hyps;

  std::string fresh(const std::string& hint, const char* fallback) {
    std::string s = hint.empty() ? std::string(fallback) : sanitize(hint);
    while (r.names_.taken(s) || used.count(s) || is_keyword(s)) s += '\'';
    used.insert(s);
    return s;
  }

  // ---- types ----

  Doc type(const MonoType& a) {
    switch (a.kind()) {
      case MonoType::Kind::Prop:
        return {"Prop", kAtom};
      case MonoType::Kind::Var: {
        auto it = ty_free.find(a.name());
        return {it == ty_free.end() ? sanitize(a.name()) : it->second, kAtom};
      }
      case MonoType::Kind::Bound:
        if (a.level() >= ty_bound.size()) throw std::logic_error("coq: unbound type level");
        return {ty_bound[a.level()], kAtom};
      case MonoType::Kind::Op: {
        std::string s = r.names_(a.name());
        for (const auto& x : a.args()) s += " " + paren(type(x), kAtom);
        return {s, a.args().empty() ? kAtom : kApp};
      }
      case MonoType::Kind::Fun:
        return {paren(type(a.dom()), kApp) + " -> " + paren(type(a.cod()), kArrow), kArrow};
    }
    return {};
  }

  // Binds type binder names; returns them.
  std::vector<std::string> bind_types(const std::vector<std::string>& binders) {
    for (const auto& b : binders) ty_bound.push_back(fresh(b, "X"));
    return ty_bound;
  }

  // ---- terms ----

  struct Binder {
    std::string name;
    Doc type;
  };

  // "(x y:A) (z:B)" or "x y:A" when `bare` and there is one atomic group.
  static std::string groups(const std::vector<Binder>& bs, bool bare) {
    std::vector<std::pair<std::string, Doc>> gs;
    for (const auto& b : bs) {
      if (!gs.empty() && gs.back().second.s == b.type.s) {
        gs.back().first += " " + b.name;
      } else {
        gs.emplace_back(b.name, b.type);
      }
    }
    if (bare && gs.size() == 1 && gs[0].second.level == kAtom) return gs[0].first + ":" + gs[0].second.s;
    std::string out;
    for (const auto& [names, ty] : gs) {
      if (!out.empty()) out += " ";
      out += "(" + names + ":" + ty.s + ")";
    }
    return out;
  }

  // Peels a chain of binders of kind k, pushing their names.
  const Term* peel(const Term& t, Term::Kind k, std::vector<Binder>& bs) {
    const Term* cur = &t;
    while (cur->is(k)) {
      Doc ty = type(cur->annot());
      std::string n = fresh(cur->name(), "x");
      tm_bound.push_back(n);
      bs.push_back({n, ty});
      cur = &cur->body();
    }
    return cur;
  }

  void unbind(const std::vector<Binder>& bs) {
    for (std::size_t i = 0; i < bs.size(); ++i) {
      used.erase(tm_bound.back());
      tm_bound.pop_back();
    }
  }

  Doc constant(const Term& c) {
    if (r.is_equality(c.name())) {
      return {"@eq " + paren(type(c.tyargs()[0]), kAtom), kApp};
    }
    std::string s = r.names_(c.name());
    for (const auto& a : c.tyargs()) s += " " + paren(type(a), kAtom);
    return {s, c.tyargs().empty() ? kAtom : kApp};
  }

  Doc term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Bound:
        if (t.index() >= tm_bound.size()) throw std::logic_error("coq: loose bound variable");
        return {tm_bound[tm_bound.size() - 1 - t.index()], kAtom};
      case Term::Kind::Free: {
        auto it = tm_free.find(t.name());
        return {it == tm_free.end() ? sanitize(t.name()) : it->second, kAtom};
      }
      case Term::Kind::Const:
        return constant(t);
      case Term::Kind::App: {
        std::vector<const Term*> args;
        const Term* head = &t;
        while (head->is(Term::Kind::App)) {
          args.push_back(&head->arg());
          head = &head->fn();
        }
        std::reverse(args.begin(), args.end());
        if (head->is(Term::Kind::Const) && r.is_equality(head->name()) && args.size() == 2) {
          return {paren(term(*args[0]), kAtom) + " = " + paren(term(*args[1]), kAtom), kEq};
        }
        std::string s = paren(term(*head), kApp);
        for (const Term* a : args) s += " " + paren(term(*a), kAtom);
        return {s, kApp};
      }
      case Term::Kind::Imp:
        return {paren(term(t.lhs()), kEq) + " -> " + paren(term(t.rhs()), kBinder), kArrow};
      case Term::Kind::Abs: {
        std::vector<Binder> bs;
        const Term* body = peel(t, Term::Kind::Abs, bs);
        Doc b = term(*body);
        unbind(bs);
        return {"fun " + groups(bs, false) + " => " + b.s, kBinder};
      }
      case Term::Kind::Forall: {
        std::vector<Binder> bs;
        const Term* body = peel(t, Term::Kind::Forall, bs);
        Doc b = term(*body);
        unbind(bs);
        return {"forall " + groups(bs, true) + ", " + b.s, kBinder};
      }
    }
    return {};
  }

  // ---- proofs ----

  Doc proof(const ProofTerm& p) {
    switch (p.kind()) {
      case ProofTerm::Kind::Conv:
        return proof(p.body());
      case ProofTerm::Kind::Ref:
        return {r.names_(p.name()), kAtom};
      case ProofTerm::Kind::Assume:
        for (auto it = hyps.rbegin(); it != hyps.rend(); ++it) {
          if (it->second == p.term()) return {it->first, kAtom};
        }
        throw std::logic_error("coq: no hypothesis " + core::to_string(p.term()));
      case ProofTerm::Kind::ImpIntro: {
        std::string ty = paren(term(p.term()), kAtom);
        std::string h = fresh("h", "h");
        hyps.emplace_back(h, p.term());
        Doc b = proof(p.body());
        hyps.pop_back();
        used.erase(h);
        return {"fun " + h + ":" + ty + " => " + b.s, kBinder};
      }
      case ProofTerm::Kind::ForallIntro: {
        std::string ty = paren(type(p.type()), kAtom);
        std::string x = fresh(p.name(), "x");
        auto saved = tm_free.count(p.name()) ? std::optional<std::string>(tm_free[p.name()]) : std::nullopt;
        tm_free[p.name()] = x;
        Doc b = proof(p.body());
        if (saved) {
          tm_free[p.name()] = *saved;
        } else {
          tm_free.erase(p.name());
        }
        used.erase(x);
        return {"fun " + x + ":" + ty + " => " + b.s, kBinder};
      }
      case ProofTerm::Kind::TyForallIntro: {
        std::string x = fresh(p.name(), "X");
        auto saved = ty_free.count(p.name()) ? std::optional<std::string>(ty_free[p.name()]) : std::nullopt;
        ty_free[p.name()] = x;
        Doc b = proof(p.body());
        if (saved) {
          ty_free[p.name()] = *saved;
        } else {
          ty_free.erase(p.name());
        }
        used.erase(x);
        return {"fun " + x + ":Type => " + b.s, kBinder};
      }
      case ProofTerm::Kind::ImpElim:
        return {paren(proof(p.body()), kApp) + " " + paren(proof(p.arg()), kAtom), kApp};
      case ProofTerm::Kind::ForallElim:
        return {paren(proof(p.body()), kApp) + " " + paren(term(p.term()), kAtom), kApp};
      case ProofTerm::Kind::TyForallElim:
        return {paren(proof(p.body()), kApp) + " " + paren(type(p.type()), kAtom), kApp};
    }
    return {};
  }

  // "forall X Y:Type, " for the prenex binders of a statement.
  std::string type_prefix(const std::vector<std::string>& binders) {
    if (binders.empty()) return {};
    std::string s = "forall";
    for (const auto& b : bind_types(binders)) s += " " + b;
    return s + ":Type, ";
  }
};

Renderer::Renderer(const core::Signature& sig, const std::vector<std::string>& fact_names)
    : sig_(sig), names_(kReserved) {
  for (const auto& e : sig.entries()) {
    const std::string& n = core::entry_name(e);
    if (is_equality(n)) continue;
    names_.add(n);
  }
  for (const auto& f : fact_names) names_.add(f);
}

bool Renderer::is_equality(const std::string& constant) const {
  if (constant != "eq" || sig_.definition(constant)) return false;
  const PolyType* t = sig_.constant_type(constant);
  if (!t || t->binders.size() != 1) return false;
  const MonoType x = MonoType::bound(0);
  return t->body == MonoType::fun(x, MonoType::fun(x, MonoType::prop()));
}

std::string Renderer::type(const PolyType& t) const {
  Scope s{*this, {}, {}, {}, {}, {}, {}};
  std::string prefix = s.type_prefix(t.binders);
  return prefix + s.type(t.body).s;
}

std::string Renderer::type(const MonoType& t, const std::vector<std::string>& binders) const {
  Scope s{*this, {}, {}, {}, {}, {}, {}};
  s.ty_bound = binders;
  return s.type(t).s;
}

std::string Renderer::statement(const PolyTerm& t) const {
  Scope s{*this, {}, {}, {}, {}, {}, {}};
  std::string prefix = s.type_prefix(t.binders);
  return prefix + s.term(t.body).s;
}

std::string Renderer::term(const PolyTerm& t) const {
  Scope s{*this, {}, {}, {}, {}, {}, {}};
  if (t.binders.empty()) return s.term(t.body).s;
  std::string out = "fun";
  for (const auto& b : s.bind_types(t.binders)) out += " (" + b + ":Type)";
  return out + " => " + s.term(t.body).s;
}

std::string Renderer::proof(const ProofTerm& p) const {
  Scope s{*this, {}, {}, {}, {}, {}, {}};
  return s.proof(p).s;
}

std::string Renderer::parameter(const std::string& constant) const {
  const PolyType* t = sig_.constant_type(constant);
  if (!t) throw std::logic_error("coq: unknown constant " + constant);
  return "Parameter " + names_(constant) + " : " + type(*t) + ".";
}

std::string Renderer::type_parameter(const core::TypeOpRef& op) const {
  std::string s = "Parameter " + names_(op.name) + " : ";
  for (std::size_t i = 0; i < op.arity; ++i) s += "Type -> ";
  return s + "Type.";
}

std::string Renderer::definition(const std::string& constant) const {
  const core::CstDefn* d = sig_.definition(constant);
  if (!d) throw std::logic_error("coq: " + constant + " has no definition");
  std::string head = "Definition " + names_(constant) + " : " + type(d->type) + " :=\n";
  Scope s{*this, {}, {}, {}, {}, {}, {}};
  // the body's type binders take the names of the stated type's binders
  std::vector<Scope::Binder> bs;
  for (const auto& b : s.bind_types(d->type.binders)) bs.push_back({b, {"Type", kAtom}});
  const Term* body = s.peel(d->body.body, Term::Kind::Abs, bs);
  std::string rest = s.term(*body).s;
  if (bs.empty()) return head + "  " + rest + ".";
  return head + "  fun " + Scope::groups(bs, false) + " =>\n    " + rest + ".";
}

std::string Renderer::axiom(const std::string& name, const PolyTerm& statement) const {
  return "Axiom " + names_(name) + " : " + this->statement(statement) + ".";
}

std::string Renderer::theorem(const std::string& name, const kernel::Theorem& th) const {
  return "Definition " + names_(name) + " : " + statement(th.concl) + " :=\n  " + proof(th.proof) + ".";
}

std::string render_type(const PolyType& t, const core::Signature& sig) { return Renderer(sig).type(t); }

namespace {

void constants_of(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Const:
      out.insert(t.name());
      break;
    case Term::Kind::App:
    case Term::Kind::Imp:
      constants_of(t.child(0), out);
      constants_of(t.child(1), out);
      break;
    case Term::Kind::Abs:
    case Term::Kind::Forall:
      constants_of(t.body(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::string render_theory(const kernel::Theory& th, const std::string& name) {
  const core::Signature& sig = th.signature();
  std::vector<std::string> facts;
  for (const auto& f : th.facts()) facts.push_back(f.name);
  Renderer r(sig, facts);

  // definitions mentioned (transitively) by axioms belong to the module type
  std::set<std::string> needed;
  std::vector<std::string> todo;
  for (const auto& f : th.facts()) {
    if (!f.is_axiom()) continue;
    std::set<std::string> cs;
    constants_of(f.statement.body, cs);
    todo.insert(todo.end(), cs.begin(), cs.end());
  }
  while (!todo.empty()) {
    std::string c = todo.back();
    todo.pop_back();
    const core::CstDefn* d = sig.definition(c);
    if (!d || !needed.insert(c).second) continue;
    std::set<std::string> cs;
    constants_of(d->body.body, cs);
    todo.insert(todo.end(), cs.begin(), cs.end());
  }

  std::vector<std::string> sig_items;
  std::vector<std::string> fun_items;
  for (const auto& item : th.order()) {
    if (item.is_fact) {
      const kernel::Fact& f = th.facts()[item.index];
      if (f.is_axiom()) {
        sig_items.push_back(r.axiom(f.name, f.statement));
      } else {
        fun_items.push_back(r.theorem(f.name, *f.theorem));
      }
      continue;
    }
    const core::SigEntry& e = sig.entries()[item.index];
    if (const auto* op = std::get_if<core::TyOpDecl>(&e)) {
      sig_items.push_back(r.type_parameter(op->op));
    } else if (const auto* c = std::get_if<core::CstDecl>(&e)) {
      if (!r.is_equality(c->name)) sig_items.push_back(r.parameter(c->name));
    } else {
      const auto& d = std::get<core::CstDefn>(e);
      (needed.count(d.name) ? sig_items : fun_items).push_back(r.definition(d.name));
    }
  }

  const std::string mod = sanitize(name);
  std::string out = "(* Generated by sttx " + std::string(kVersion) + " from theory " + name + ". *)\n";
  auto renamed = r.names().renamed();
  bool eq = r.is_equality("eq");
  if (renamed.empty() && !eq) {
    out += "(* Identifier mapping: identity. *)\n";
  } else {
    out += "(* Identifier mapping:\n";
    if (eq) out += "     eq : Coq equality, printed infix\n";
    for (const auto& [from, to] : renamed) out += "     " + from + " => " + to + "\n";
    out += "*)\n";
  }
  auto emit = [&](const std::vector<std::string>& items) {
    for (const auto& s : items) {
      out += s + "\n";
      if (s.find('\n') != std::string::npos) out += "\n";
    }
  };
  out += "\nModule Type " + mod + "_SIG.\n";
  emit(sig_items);
  out += "End " + mod + "_SIG.\n\n";
  out += "Module " + mod + "_FUN (M : " + mod + "_SIG).\n";
  if (!sig_items.empty()) out += "Import M.\n";
  emit(fun_items);
  out += "End " + mod + "_FUN.\n";
  return out;
}

}  // namespace sttx::coq
