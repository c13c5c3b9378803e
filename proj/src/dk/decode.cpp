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

#include "sttx/dk/decode.hpp"

#include <optional>
#include <set>

#include "core/names.hpp"
#include "sttx/core/rewrite.hpp"
#include "sttx/kernel/typing.hpp"

namespace sttx::dk {

using core::MonoType;
using core::PolyTerm;
using core::PolyType;
using core::Term;
using kernel::ProofTerm;

namespace {

[[noreturn]] void fail(DkErrc k, const std::string& msg) { throw DkError(k, msg); }

std::optional<DkTerm> unary(const DkTerm& d, std::string_view head) {
  if (d.is(DkTerm::Kind::App) && d.fn().is_sym(head)) return d.arg();
  return std::nullopt;
}

DkTerm strip_p(const DkTerm& d) {
  if (auto a = unary(d, sym::kP)) return *a;
  return d;
}

struct Binding {
  enum class Kind { Type, Term, Proof } kind;
  std::string dk;
  std::string core;
  MonoType type;  // Type: the type it stands for; Term: its type
  Term prop;      // Proof
};

struct Decoder {
  Decoder(const core::Signature& s, const kernel::FactTable* f, std::size_t fu) : sig(s), facts(f), fuel(fu) {}

  const core::Signature& sig;
  const kernel::FactTable* facts;
  std::size_t fuel;
  std::vector<Binding> env;
  core::TypingContext ctx;
  std::size_t counter = 0;

  const Binding* lookup(const std::string& name) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (it->dk == name) return &*it;
    }
    return nullptr;
  }

  // ---- types

  MonoType mono(const DkTerm& d) {
    if (d.is(DkTerm::Kind::Var)) {
      const Binding* b = lookup(d.name());
      if (!b) fail(DkErrc::NotATypeEncoding, "unbound variable " + d.name());
      if (b->kind != Binding::Kind::Type) fail(DkErrc::NotATypeEncoding, d.name() + " is not a type variable");
      return b->type;
    }
    DkTerm h = d.head();
    std::vector<DkTerm> args = d.args();
    if (!h.is(DkTerm::Kind::Sym)) fail(DkErrc::NotATypeEncoding, "not a type: " + to_string(d));
    const std::string& n = h.name();
    if (n == sym::kProp) {
      if (!args.empty()) fail(DkErrc::NotATypeEncoding, "prop applied to arguments");
      return MonoType::prop();
    }
    if (n == sym::kArr) {
      if (args.size() != 2) fail(DkErrc::NotATypeEncoding, "arr expects 2 arguments: " + to_string(d));
      return MonoType::fun(mono(args[0]), mono(args[1]));
    }
    if (n == sym::kForallKtype) fail(DkErrc::NonPrenex, "type quantifier inside a type: " + to_string(d));
    if (is_builtin(n)) fail(DkErrc::NotATypeEncoding, n + " in a type: " + to_string(d));
    auto op = sig.type_op(n);
    if (!op) fail(DkErrc::NotATypeEncoding, "unknown type operator " + n);
    if (op->arity != args.size()) {
      fail(DkErrc::NotATypeEncoding,
           n + " expects " + std::to_string(op->arity) + " arguments, got " + std::to_string(args.size()));
    }
    std::vector<MonoType> margs;
    for (const auto& a : args) margs.push_back(mono(a));
    return MonoType::op(n, std::move(margs));
  }

  // Type positions inside terms report term errors.
  MonoType ty_arg(const DkTerm& d) {
    try {
      return mono(d);
    } catch (const DkError& e) {
      if (e.kind() != DkErrc::NotATypeEncoding) throw;
      fail(DkErrc::NotATermEncoding, std::string("bad type argument: ") + e.what());
    }
  }

  // `term A` or `term (p A)`.
  std::optional<MonoType> term_annot(const DkTerm& d) {
    auto a = unary(d, sym::kTerm);
    if (!a) return std::nullopt;
    return ty_arg(strip_p(*a));
  }

  PolyType poly_type(const DkTerm& d) {
    auto inner = unary(d, sym::kTerm);
    if (!inner) fail(DkErrc::NotATypeEncoding, "expected term (...), got " + to_string(d));
    DkTerm t = *inner;
    std::vector<std::string> binders;
    std::set<std::string> used;
    std::size_t base = env.size();
    while (auto f = unary(t, sym::kForallKtype)) {
      if (!f->is(DkTerm::Kind::Lam) || !f->annot().is_sym(sym::kType)) {
        fail(DkErrc::NotATypeEncoding, "forallKtype expects a lambda over type: " + to_string(*f));
      }
      std::string hint = core::detail::fresh_name(f->name(), used, "X");
      env.push_back({Binding::Kind::Type, f->name(), hint, MonoType::bound(binders.size()), {}});
      binders.push_back(hint);
      DkTerm b = f->body();
      t = b;
    }
    MonoType body = mono(strip_p(t));
    env.resize(base);
    return PolyType(std::move(binders), std::move(body));
  }

  // ---- terms

  Term term(const DkTerm& d) {
    switch (d.kind()) {
      case DkTerm::Kind::Var: {
        const Binding* b = lookup(d.name());
        if (!b) fail(DkErrc::NotATermEncoding, "unbound variable " + d.name());
        if (b->kind != Binding::Kind::Term) fail(DkErrc::NotATermEncoding, d.name() + " is not a term variable");
        return Term::free(b->core);
      }
      case DkTerm::Kind::Lam: {
        if (d.annot().is_sym(sym::kType)) fail(DkErrc::NotATermEncoding, "type abstraction inside a term");
        auto a = term_annot(d.annot());
        if (!a) fail(DkErrc::NotATermEncoding, "lambda annotation is not a term type: " + to_string(d.annot()));
        return bind_term(d.name(), *a, d.body(), false);
      }
      case DkTerm::Kind::Pi:
        fail(DkErrc::NotATermEncoding, "product in a term: " + to_string(d));
      case DkTerm::Kind::Sym:
      case DkTerm::Kind::App:
        break;
    }
    DkTerm h = d.head();
    std::vector<DkTerm> args = d.args();
    Term out;
    std::size_t used = 0;
    if (h.is(DkTerm::Kind::Sym)) {
      const std::string& n = h.name();
      if (n == sym::kImpl) {
        if (args.size() != 2) fail(DkErrc::NotATermEncoding, "impl expects 2 arguments: " + to_string(d));
        return Term::imp(term(args[0]), term(args[1]));
      }
      if (n == sym::kForall) {
        if (args.size() != 2 || !args[1].is(DkTerm::Kind::Lam)) {
          fail(DkErrc::NotATermEncoding, "forall expects a type and a lambda: " + to_string(d));
        }
        MonoType a = ty_arg(args[0]);
        auto annot = term_annot(args[1].annot());
        if (!annot) fail(DkErrc::NotATermEncoding, "forall binder annotation: " + to_string(args[1].annot()));
        if (!(*annot == a)) {
          fail(DkErrc::TypeMismatch, "forall over " + core::to_string(a) + " binds a variable of type " +
                                         core::to_string(*annot));
        }
        return bind_term(args[1].name(), a, args[1].body(), true);
      }
      if (n == sym::kForallKprop) fail(DkErrc::NonPrenex, "type quantifier inside a proposition: " + to_string(d));
      if (is_builtin(n)) fail(DkErrc::NotATermEncoding, n + " used as a term");
      const PolyType* ty = sig.constant_type(n);
      if (!ty) {
        if (sig.type_op(n)) fail(DkErrc::NotATermEncoding, "type operator " + n + " used as a term");
        fail(DkErrc::NotATermEncoding, "unknown constant " + n);
      }
      std::vector<MonoType> tyargs;
      for (; used < args.size() && used < ty->binders.size(); ++used) tyargs.push_back(ty_arg(args[used]));
      out = Term::cnst(n, std::move(tyargs));
    } else {
      out = term(h);
    }
    for (; used < args.size(); ++used) out = Term::app(out, term(args[used]));
    return out;
  }

  Term bind_term(const std::string& x, const MonoType& a, const DkTerm& body, bool quantifier) {
    std::string internal = "%" + std::to_string(counter++);
    env.push_back({Binding::Kind::Term, x, internal, a, {}});
    Term b = core::close(term(body), internal);
    env.pop_back();
    return quantifier ? Term::forall(x, a, b) : Term::abs(x, a, b);
  }

  // Binders of a prenex proposition, then its body.
  PolyTerm prop(const DkTerm& d) {
    DkTerm t = d;
    std::vector<std::string> binders;
    std::set<std::string> used;
    std::size_t base = env.size();
    while (auto f = unary(t, sym::kForallKprop)) {
      if (!f->is(DkTerm::Kind::Lam) || !f->annot().is_sym(sym::kType)) {
        fail(DkErrc::NotATermEncoding, "forallKprop expects a lambda over type: " + to_string(*f));
      }
      std::string hint = core::detail::fresh_name(f->name(), used, "X");
      env.push_back({Binding::Kind::Type, f->name(), hint, MonoType::bound(binders.size()), {}});
      binders.push_back(hint);
      DkTerm b = f->body();
      t = b;
    }
    Term body = term(t);
    env.resize(base);
    return PolyTerm(std::move(binders), std::move(body));
  }

  // ---- proofs

  std::string fresh(const std::string& hint) {
    std::string n = hint.empty() ? "x" : hint;
    while (ctx.binds(n)) n += '\'';
    return n;
  }

  bool convertible(const PolyTerm& a, const PolyTerm& b) { return core::conv(a, b, sig, fuel).has_value(); }

  // The goal itself when it has the requested head, else its normal form.
  Term expose(const Term& g, Term::Kind k, const char* what) {
    if (g.is(k)) return g;
    Term nf = core::normalize(g, sig, fuel).term;
    if (!nf.is(k)) fail(DkErrc::NotAProofEncoding, std::string(what) + " against " + core::to_string(g));
    return nf;
  }

  Term mono_prop(const DkTerm& d) {
    PolyTerm p = prop(d);
    if (!p.is_mono()) fail(DkErrc::NotAProofEncoding, "hypothesis with type quantifiers: " + to_string(d));
    try {
      kernel::check_proposition(sig, ctx, p.body);
    } catch (const kernel::KernelError& e) {
      fail(DkErrc::TypeMismatch, e.what());
    }
    return p.body;
  }

  ProofTerm check(const DkTerm& d, const PolyTerm& goal) {
    if (!d.is(DkTerm::Kind::Lam)) return fit(infer(d), goal);
    const DkTerm& annot = d.annot();
    if (annot.is_sym(sym::kType)) {
      if (goal.is_mono()) fail(DkErrc::NotAProofEncoding, "type abstraction against " + core::to_string(goal));
      std::string n = fresh(d.name());
      ctx.push_type(n);
      env.push_back({Binding::Kind::Type, d.name(), n, MonoType::var(n), {}});
      ProofTerm b = check(d.body(), core::open_type(goal, n));
      env.pop_back();
      ctx.pop();
      return ProofTerm::ty_forall_intro(n, b);
    }
    if (!goal.is_mono()) fail(DkErrc::NotAProofEncoding, "expected a type abstraction for " + core::to_string(goal));
    const Term& g = goal.body;
    if (auto phi = unary(annot, sym::kProof)) {
      Term h = mono_prop(*phi);
      Term target = expose(g, Term::Kind::Imp, "implication introduction");
      if (!(h == target.lhs()) && !convertible(h, target.lhs())) {
        fail(DkErrc::NotAProofEncoding,
             "hypothesis " + core::to_string(h) + " does not match " + core::to_string(target.lhs()));
      }
      env.push_back({Binding::Kind::Proof, d.name(), {}, {}, h});
      ProofTerm b = check(d.body(), target.rhs());
      env.pop_back();
      ProofTerm p = ProofTerm::imp_intro(h, b);
      if (!(Term::imp(h, target.rhs()) == g)) p = ProofTerm::conv(p, g);
      return p;
    }
    if (auto a = term_annot(annot)) {
      Term target = expose(g, Term::Kind::Forall, "universal introduction");
      if (!(*a == target.annot())) {
        fail(DkErrc::NotAProofEncoding,
             "binder of type " + core::to_string(*a) + " against " + core::to_string(target));
      }
      std::string n = fresh(d.name());
      ctx.push_term(n, *a);
      env.push_back({Binding::Kind::Term, d.name(), n, *a, {}});
      ProofTerm b = check(d.body(), core::open(target.body(), Term::free(n)));
      env.pop_back();
      ctx.pop();
      ProofTerm p = ProofTerm::forall_intro(n, *a, b);
      if (!(target == g)) p = ProofTerm::conv(p, g);
      return p;
    }
    fail(DkErrc::NotAProofEncoding, "lambda annotation " + to_string(annot));
  }

  ProofTerm fit(std::pair<ProofTerm, PolyTerm> inferred, const PolyTerm& goal) {
    auto& [p, c] = inferred;
    if (c == goal) return p;
    if (!convertible(c, goal)) {
      fail(DkErrc::NotAProofEncoding, "proves " + core::to_string(c) + ", expected " + core::to_string(goal));
    }
    return ProofTerm::conv(p, goal);
  }

  std::pair<ProofTerm, PolyTerm> infer(const DkTerm& d) {
    DkTerm h = d.head();
    std::vector<DkTerm> args = d.args();
    ProofTerm p;
    PolyTerm c;
    if (h.is(DkTerm::Kind::Var)) {
      const Binding* b = lookup(h.name());
      if (!b) fail(DkErrc::NotAProofEncoding, "unbound variable " + h.name());
      if (b->kind != Binding::Kind::Proof) fail(DkErrc::NotAProofEncoding, h.name() + " is not a proof");
      p = ProofTerm::assume(b->prop);
      c = b->prop;
    } else if (h.is(DkTerm::Kind::Sym) && facts && facts->count(h.name())) {
      p = ProofTerm::ref(h.name());
      c = facts->at(h.name());
    } else {
      fail(DkErrc::NotAProofEncoding, "not a proof: " + to_string(h));
    }
    for (const auto& a : args) {
      if (!c.is_mono()) {
        MonoType ty = mono(a);
        p = ProofTerm::ty_forall_elim(p, ty);
        c = core::open_type(c, ty);
        continue;
      }
      Term cur = c.body;
      if (!cur.is(Term::Kind::Imp) && !cur.is(Term::Kind::Forall)) {
        Term nf = core::normalize(cur, sig, fuel).term;
        if (!nf.is(Term::Kind::Imp) && !nf.is(Term::Kind::Forall)) {
          fail(DkErrc::NotAProofEncoding, "applying a proof of " + core::to_string(cur));
        }
        p = ProofTerm::conv(p, nf);
        cur = nf;
      }
      if (cur.is(Term::Kind::Imp)) {
        p = ProofTerm::imp_elim(p, check(a, cur.lhs()));
        c = cur.rhs();
      } else {
        Term t = term(a);
        MonoType ty;
        try {
          ty = kernel::infer_mono(sig, ctx, t);
        } catch (const kernel::KernelError& e) {
          fail(DkErrc::TypeMismatch, e.what());
        }
        if (!(ty == cur.annot())) {
          fail(DkErrc::NotAProofEncoding,
               "instance " + core::to_string(t) + " : " + core::to_string(ty) + " for " + core::to_string(cur));
        }
        p = ProofTerm::forall_elim(p, t);
        c = core::open(cur.body(), t);
      }
    }
    return {p, c};
  }
};

DkError at_line(const DkError& e, int line) {
  if (e.line() > 0) return e;
  std::string msg = e.what();
  std::string prefix = std::string(to_string(e.kind())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  return DkError(e.kind(), msg, line, 1);
}

void check_wf(const core::Signature& sig, const PolyType& t) {
  if (!kernel::wf_polytype(sig, {}, t)) fail(DkErrc::NotATypeEncoding, "ill-formed type " + core::to_string(t));
}

// type, or type -> ... -> type.
std::optional<std::size_t> type_op_arity(const DkTerm& d) {
  std::size_t n = 0;
  DkTerm t = d;
  while (t.is(DkTerm::Kind::Pi)) {
    if (!t.annot().is_sym(sym::kType)) return std::nullopt;
    ++n;
    DkTerm b = t.body();
    t = b;
  }
  if (!t.is_sym(sym::kType)) return std::nullopt;
  return n;
}

}  // namespace

PolyType decode_type(const DkTerm& d, const core::Signature& sig) {
  Decoder dec(sig, nullptr, core::kDefaultFuel);
  PolyType t = dec.poly_type(d);
  check_wf(sig, t);
  return t;
}

PolyTerm decode_term(const DkTerm& d, const PolyType& expected, const core::Signature& sig) {
  Decoder dec(sig, nullptr, core::kDefaultFuel);
  DkTerm t = d;
  std::vector<std::string> binders;
  std::set<std::string> used;
  while (t.is(DkTerm::Kind::Lam) && t.annot().is_sym(sym::kType)) {
    std::string hint = core::detail::fresh_name(t.name(), used, "X");
    dec.env.push_back({Binding::Kind::Type, t.name(), hint, MonoType::bound(binders.size()), {}});
    binders.push_back(hint);
    DkTerm b = t.body();
    t = b;
  }
  PolyTerm out(std::move(binders), dec.term(t));
  try {
    kernel::check_definition(sig, core::CstDefn{"<body>", expected, out});
  } catch (const kernel::KernelError& e) {
    fail(DkErrc::TypeMismatch, e.what());
  }
  return out;
}

PolyTerm decode_prop(const DkTerm& d, const core::Signature& sig) {
  Decoder dec(sig, nullptr, core::kDefaultFuel);
  PolyTerm p = dec.prop(d);
  try {
    kernel::check_proposition(sig, {}, p);
  } catch (const kernel::KernelError& e) {
    fail(DkErrc::TypeMismatch, e.what());
  }
  return p;
}

ProofTerm decode_proof(const DkTerm& d, const PolyTerm& goal, const core::Signature& sig,
                       const kernel::FactTable* facts, std::size_t fuel) {
  Decoder dec(sig, facts, fuel);
  ProofTerm p = dec.check(d, goal);
  try {
    kernel::check_proof(sig, {}, {}, p, goal, facts, fuel);
  } catch (const kernel::KernelError& e) {
    fail(DkErrc::DecodeUnsound, e.what());
  }
  return p;
}

namespace {

void decode_entry(kernel::Theory& th, const DkEntry& e, EntryReport& rep, std::size_t fuel) {
  if (auto arity = type_op_arity(e.type)) {
    rep.kind = "type operator";
    if (e.body) fail(DkErrc::NotATypeEncoding, "type operators cannot be defined");
    th.extend(core::TyOpDecl{{e.name, *arity}});
    return;
  }
  if (unary(e.type, sym::kTerm)) {
    PolyType ty = decode_type(e.type, th.signature());
    if (e.body) {
      rep.kind = "definition";
      PolyTerm body = decode_term(*e.body, ty, th.signature());
      th.extend(core::CstDefn{e.name, std::move(ty), std::move(body)});
    } else {
      rep.kind = "constant";
      th.extend(core::CstDecl{e.name, std::move(ty)});
    }
    return;
  }
  if (auto phi = unary(e.type, sym::kProof)) {
    PolyTerm statement = decode_prop(*phi, th.signature());
    if (e.body) {
      rep.kind = "theorem";
      ProofTerm p = decode_proof(*e.body, statement, th.signature(), &th.statements(), fuel);
      try {
        th.add_theorem(e.name, std::move(statement), p, fuel);
      } catch (const kernel::KernelError& err) {
        if (err.kind() == kernel::KernelErrc::IllFormedContext) throw;
        fail(DkErrc::DecodeUnsound, err.what());
      }
    } else {
      rep.kind = "axiom";
      th.add_axiom(e.name, std::move(statement));
    }
    return;
  }
  fail(DkErrc::NotATypeEncoding, "entry type is not type, term (...) or proof (...): " + to_string(e.type));
}

}  // namespace

kernel::Theory decode_theory(const std::vector<DkEntry>& entries, std::vector<EntryReport>* report,
                             std::size_t fuel) {
  kernel::Theory th;
  for (const auto& e : entries) {
    EntryReport rep{e.name, e.line, "entry", false, {}};
    try {
      decode_entry(th, e, rep, fuel);
      rep.ok = true;
    } catch (const DkError& err) {
      if (!report) throw at_line(err, e.line);
      rep.error = at_line(err, e.line).what();
    } catch (const kernel::KernelError& err) {
      if (!report) throw DkError(DkErrc::TypeMismatch, e.name + ": " + err.what(), e.line, 1);
      rep.error = DkError(DkErrc::TypeMismatch, e.name + ": " + err.what(), e.line, 1).what();
    } catch (const core::RewriteError& err) {
      if (!report) throw;
      rep.error = e.name + ": " + err.what();
    }
    if (report) report->push_back(std::move(rep));
  }
  return th;
}

kernel::Theory load_theory(std::string_view text, std::vector<EntryReport>* report, std::size_t fuel) {
  return decode_theory(parse_dk(text), report, fuel);
}

}  // namespace sttx::dk
