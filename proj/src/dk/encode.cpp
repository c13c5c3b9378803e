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

#include "sttx/dk/encode.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace sttx::dk {

using core::MonoType;
using core::PolyTerm;
using core::Term;
using kernel::ProofTerm;

namespace {

DkTerm S(std::string_view n) { return DkTerm::sym(std::string(n)); }

bool valid_ident(const std::string& s) {
  if (s.empty() || s[0] == '\'') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  }
  return true;
}

struct Encoder {
  explicit Encoder(const std::set<std::string>& r) : reserved(r) {}

  const std::set<std::string>& reserved;
  std::set<std::string> in_scope;
  std::vector<std::string> ty_bound;
  std::map<std::string, std::string> ty_free;
  std::vector<std::string> tm_bound;
  std::map<std::string, std::string> tm_free;
  std::vector<std::pair<std::string, Term>> hyps;

  std::string fresh(const std::string& hint, const char* fallback) {
    std::string n = valid_ident(hint) ? hint : fallback;
    while (reserved.count(n) || in_scope.count(n) || is_builtin(n)) n += '\'';
    in_scope.insert(n);
    return n;
  }

  DkTerm mono(const MonoType& a) {
    switch (a.kind()) {
      case MonoType::Kind::Prop:
        return S(sym::kProp);
      case MonoType::Kind::Fun:
        return DkTerm::apps(S(sym::kArr), {mono(a.dom()), mono(a.cod())});
      case MonoType::Kind::Op: {
        std::vector<DkTerm> args;
        for (const auto& x : a.args()) args.push_back(mono(x));
        return DkTerm::apps(S(a.name()), std::move(args));
      }
      case MonoType::Kind::Bound:
        if (a.level() >= ty_bound.size()) throw std::logic_error("encode: unbound type level");
        return DkTerm::var(ty_bound[a.level()]);
      case MonoType::Kind::Var: {
        auto it = ty_free.find(a.name());
        return DkTerm::var(it == ty_free.end() ? a.name() : it->second);
      }
    }
    return {};
  }

  DkTerm annot(const MonoType& a) { return DkTerm::app(S(sym::kTerm), DkTerm::app(S(sym::kP), mono(a))); }

  DkTerm term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Bound:
        if (t.index() >= tm_bound.size()) throw std::logic_error("encode: loose bound variable");
        return DkTerm::var(tm_bound[tm_bound.size() - 1 - t.index()]);
      case Term::Kind::Free: {
        auto it = tm_free.find(t.name());
        return DkTerm::var(it == tm_free.end() ? t.name() : it->second);
      }
      case Term::Kind::Const: {
        std::vector<DkTerm> args;
        for (const auto& a : t.tyargs()) args.push_back(mono(a));
        return DkTerm::apps(S(t.name()), std::move(args));
      }
      case Term::Kind::App:
        return DkTerm::app(term(t.fn()), term(t.arg()));
      case Term::Kind::Imp:
        return DkTerm::apps(S(sym::kImpl), {term(t.lhs()), term(t.rhs())});
      case Term::Kind::Abs:
        return binder(t);
      case Term::Kind::Forall:
        return DkTerm::apps(S(sym::kForall), {mono(t.annot()), binder(t)});
    }
    return {};
  }

  DkTerm binder(const Term& t) {
    std::string x = fresh(t.name(), "x");
    tm_bound.push_back(x);
    DkTerm body = term(t.body());
    tm_bound.pop_back();
    in_scope.erase(x);
    return DkTerm::lam(x, annot(t.annot()), body);
  }

  // Wraps `inner` in one `wrap (\X : type => ...)` per binder.
  template <class F>
  DkTerm prenex(const std::vector<std::string>& binders, std::string_view wrap, F inner) {
    std::vector<std::string> names;
    for (const auto& b : binders) {
      names.push_back(fresh(b, "X"));
      ty_bound.push_back(names.back());
    }
    DkTerm out = inner();
    for (std::size_t i = names.size(); i-- > 0;) {
      out = DkTerm::lam(names[i], S(sym::kType), out);
      if (!wrap.empty()) out = DkTerm::app(S(wrap), out);
      in_scope.erase(names[i]);
    }
    ty_bound.clear();
    return out;
  }

  DkTerm proof(const ProofTerm& p) {
    switch (p.kind()) {
      case ProofTerm::Kind::Conv:
        return proof(p.body());
      case ProofTerm::Kind::Ref:
        return S(p.name());
      case ProofTerm::Kind::Assume: {
        for (auto it = hyps.rbegin(); it != hyps.rend(); ++it) {
          if (it->second == p.term()) return DkTerm::var(it->first);
        }
        throw std::logic_error("encode: no hypothesis " + core::to_string(p.term()));
      }
      case ProofTerm::Kind::ImpIntro: {
        std::string h = fresh("h", "h");
        DkTerm phi = DkTerm::app(S(sym::kProof), term(p.term()));
        hyps.emplace_back(h, p.term());
        DkTerm body = proof(p.body());
        hyps.pop_back();
        in_scope.erase(h);
        return DkTerm::lam(h, phi, body);
      }
      case ProofTerm::Kind::ForallIntro: {
        std::string x = fresh(p.name(), "x");
        DkTerm a = annot(p.type());
        auto saved = tm_free.find(p.name()) == tm_free.end() ? std::optional<std::string>()
                                                              : std::optional<std::string>(tm_free[p.name()]);
        tm_free[p.name()] = x;
        DkTerm body = proof(p.body());
        if (saved) {
          tm_free[p.name()] = *saved;
        } else {
          tm_free.erase(p.name());
        }
        in_scope.erase(x);
        return DkTerm::lam(x, a, body);
      }
      case ProofTerm::Kind::TyForallIntro: {
        std::string x = fresh(p.name(), "X");
        ty_free[p.name()] = x;
        DkTerm body = proof(p.body());
        ty_free.erase(p.name());
        in_scope.erase(x);
        return DkTerm::lam(x, S(sym::kType), body);
      }
      case ProofTerm::Kind::ImpElim:
        return DkTerm::app(proof(p.body()), proof(p.arg()));
      case ProofTerm::Kind::ForallElim:
        return DkTerm::app(proof(p.body()), term(p.term()));
      case ProofTerm::Kind::TyForallElim:
        return DkTerm::app(proof(p.body()), mono(p.type()));
    }
    return {};
  }
};

}  // namespace

DkTerm encode_mono(const MonoType& a, const std::vector<std::string>& binder_names) {
  std::set<std::string> none;
  Encoder enc(none);
  enc.ty_bound = binder_names;
  return enc.mono(a);
}

DkTerm encode_type(const core::PolyType& t, const std::set<std::string>& reserved) {
  Encoder enc(reserved);
  if (t.is_mono()) return enc.annot(t.body);
  return DkTerm::app(S(sym::kTerm), enc.prenex(t.binders, sym::kForallKtype, [&] { return enc.mono(t.body); }));
}

DkTerm encode_term(const PolyTerm& t, const std::set<std::string>& reserved) {
  Encoder enc(reserved);
  return enc.prenex(t.binders, {}, [&] { return enc.term(t.body); });
}

DkTerm encode_prop(const PolyTerm& t, const std::set<std::string>& reserved) {
  Encoder enc(reserved);
  return enc.prenex(t.binders, sym::kForallKprop, [&] { return enc.term(t.body); });
}

DkTerm encode_proof(const ProofTerm& p, const std::set<std::string>& reserved) {
  Encoder enc(reserved);
  return enc.proof(p);
}

std::vector<DkEntry> encode(const kernel::Theory& th) {
  std::set<std::string> reserved;
  for (const auto& e : th.signature().entries()) reserved.insert(core::entry_name(e));
  for (const auto& f : th.facts()) reserved.insert(f.name);

  std::vector<DkEntry> out;
  for (const auto& item : th.order()) {
    DkEntry e;
    if (item.is_fact) {
      const kernel::Fact& f = th.facts()[item.index];
      e.name = f.name;
      e.type = DkTerm::app(S(sym::kProof), encode_prop(f.statement, reserved));
      if (f.theorem) e.body = encode_proof(f.theorem->proof, reserved);
    } else {
      const core::SigEntry& s = th.signature().entries()[item.index];
      e.name = core::entry_name(s);
      if (const auto* op = std::get_if<core::TyOpDecl>(&s)) {
        e.type = S(sym::kType);
        for (std::size_t i = 0; i < op->op.arity; ++i) e.type = DkTerm::arrow(S(sym::kType), e.type);
      } else if (const auto* c = std::get_if<core::CstDecl>(&s)) {
        e.type = encode_type(c->type, reserved);
      } else {
        const auto& d = std::get<core::CstDefn>(s);
        e.type = encode_type(d.type, reserved);
        e.body = encode_term(d.body, reserved);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace sttx::dk
