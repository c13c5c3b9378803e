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

#include "sttx/kernel/typing.hpp"

#include <set>
#include <variant>
#include <vector>

namespace sttx::kernel {

using core::MonoType;
using core::PolyTerm;
using core::PolyType;
using core::Position;
using core::Term;

std::string_view to_string(KernelErrc e) {
  switch (e) {
    case KernelErrc::UnboundVariable:
      return "UnboundVariable";
    case KernelErrc::UnboundConstant:
      return "UnboundConstant";
    case KernelErrc::TypeMismatch:
      return "TypeMismatch";
    case KernelErrc::NotAFunction:
      return "NotAFunction";
    case KernelErrc::NotAProposition:
      return "NotAProposition";
    case KernelErrc::ArityError:
      return "ArityError";
    case KernelErrc::IllFormedType:
      return "IllFormedType";
    case KernelErrc::IllFormedContext:
      return "IllFormedContext";
    case KernelErrc::HypNotFound:
      return "HypNotFound";
    case KernelErrc::RuleMismatch:
      return "RuleMismatch";
    case KernelErrc::SideConditionViolated:
      return "SideConditionViolated";
    case KernelErrc::ConvFailed:
      return "ConvFailed";
    case KernelErrc::UnknownFact:
      return "UnknownFact";
  }
  return "KernelErrc?";
}

namespace {

enum class TypeFault { None, Scope, Arity };

TypeFault type_fault(const core::Signature& sig, const core::TypingContext& ctx, const MonoType& a,
                     std::uint32_t levels) {
  switch (a.kind()) {
    case MonoType::Kind::Var:
      return ctx.has_type_var(a.name()) ? TypeFault::None : TypeFault::Scope;
    case MonoType::Kind::Bound:
      return a.level() < levels ? TypeFault::None : TypeFault::Scope;
    case MonoType::Kind::Prop:
      return TypeFault::None;
    case MonoType::Kind::Fun:
    case MonoType::Kind::Op: {
      if (a.is_op()) {
        auto op = sig.type_op(a.name());
        if (!op || op->arity != a.args().size()) return TypeFault::Arity;
      }
      for (const auto& arg : a.args()) {
        if (auto f = type_fault(sig, ctx, arg, levels); f != TypeFault::None) return f;
      }
      return TypeFault::None;
    }
  }
  return TypeFault::Arity;
}

bool distinct(const std::vector<std::string>& names) {
  return std::set<std::string>(names.begin(), names.end()).size() == names.size();
}

}  // namespace

bool wf_monotype(const core::Signature& sig, const core::TypingContext& ctx, const MonoType& a,
                 std::uint32_t bound_levels) {
  return type_fault(sig, ctx, a, bound_levels) == TypeFault::None;
}

bool wf_polytype(const core::Signature& sig, const core::TypingContext& ctx, const PolyType& t) {
  if (!distinct(t.binders)) return false;
  return wf_monotype(sig, ctx, t.body, static_cast<std::uint32_t>(t.binders.size()));
}

bool wf_context(const core::Signature& sig, const core::TypingContext& ctx) {
  core::TypingContext prefix;
  for (const auto& e : ctx.entries()) {
    if (prefix.binds(e.name)) return false;
    if (e.type) {
      if (!wf_monotype(sig, prefix, *e.type)) return false;
      prefix.push_term(e.name, *e.type);
    } else {
      prefix.push_type(e.name);
    }
  }
  return true;
}

void check_signature(const core::Signature& sig) {
  core::Signature prefix;
  const core::TypingContext empty;
  for (const auto& e : sig.entries()) {
    const std::string& name = core::entry_name(e);
    if (name.empty()) throw KernelError(KernelErrc::IllFormedContext, "empty name in signature");
    if (prefix.contains(name)) throw KernelError(KernelErrc::IllFormedContext, name + " is already in the signature");
    if (const auto* d = std::get_if<core::CstDecl>(&e)) {
      if (!wf_polytype(prefix, empty, d->type)) {
        throw KernelError(KernelErrc::IllFormedType, "type of " + name + " is ill-formed: " + core::to_string(d->type));
      }
    } else if (const auto* d = std::get_if<core::CstDefn>(&e)) {
      if (!wf_polytype(prefix, empty, d->type)) {
        throw KernelError(KernelErrc::IllFormedType, "type of " + name + " is ill-formed: " + core::to_string(d->type));
      }
      check_definition(prefix, *d);
    }
    prefix.add(e);
  }
}

bool wf_signature(const core::Signature& sig) {
  try {
    check_signature(sig);
    return true;
  } catch (const KernelError&) {
    return false;
  }
}

namespace {

struct Infer {
  const core::Signature& sig;
  const core::TypingContext& ctx;
  std::uint32_t levels;
  std::vector<MonoType> locals;
  Position path;

  [[noreturn]] void fail(KernelErrc k, const std::string& msg) { throw KernelError(k, msg, path); }

  void check_type(const MonoType& a) {
    switch (type_fault(sig, ctx, a, levels)) {
      case TypeFault::None:
        return;
      case TypeFault::Scope:
        fail(KernelErrc::IllFormedType, "type mentions an unbound type variable: " + core::to_string(a));
      case TypeFault::Arity:
        fail(KernelErrc::IllFormedType, "bad type operator application in " + core::to_string(a));
    }
  }

  const PolyType& constant(const Term& t) {
    const PolyType* ty = sig.constant_type(t.name());
    if (!ty) fail(KernelErrc::UnboundConstant, t.name());
    if (t.tyargs().size() > ty->binders.size()) {
      fail(KernelErrc::ArityError, "too many type arguments for " + t.name());
    }
    for (const auto& a : t.tyargs()) {
      if (type_fault(sig, ctx, a, levels) == TypeFault::Scope) {
        fail(KernelErrc::ArityError, "type argument " + core::to_string(a) + " of " + t.name() + " is not in scope");
      }
      check_type(a);
    }
    return *ty;
  }

  MonoType child(const Term& t, std::uint8_t i) {
    path.push_back(i);
    MonoType r = mono(t);
    path.pop_back();
    return r;
  }

  MonoType mono(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Bound:
        if (t.index() >= locals.size()) fail(KernelErrc::UnboundVariable, "loose bound variable");
        return locals[locals.size() - 1 - t.index()];
      case Term::Kind::Free: {
        const MonoType* ty = ctx.term_type(t.name());
        if (!ty) fail(KernelErrc::UnboundVariable, t.name());
        return *ty;
      }
      case Term::Kind::Const: {
        const PolyType& ty = constant(t);
        if (t.tyargs().size() != ty.binders.size()) {
          fail(KernelErrc::ArityError, t.name() + " expects " + std::to_string(ty.binders.size()) +
                                           " type arguments, got " + std::to_string(t.tyargs().size()));
        }
        return core::instantiate_bound(ty.body, t.tyargs());
      }
      case Term::Kind::Abs: {
        check_type(t.annot());
        locals.push_back(t.annot());
        MonoType b = child(t.body(), 0);
        locals.pop_back();
        return MonoType::fun(t.annot(), b);
      }
      case Term::Kind::App: {
        MonoType f = child(t.fn(), 0);
        if (!f.is_fun()) fail(KernelErrc::NotAFunction, "applied term has type " + core::to_string(f));
        MonoType a = child(t.arg(), 1);
        if (!(a == f.dom())) {
          path.push_back(1);
          fail(KernelErrc::TypeMismatch, "expected " + core::to_string(f.dom()) + ", found " + core::to_string(a));
        }
        return f.cod();
      }
      case Term::Kind::Imp:
        for (std::uint8_t i = 0; i < 2; ++i) {
          MonoType s = child(t.child(i), i);
          if (!s.is_prop()) {
            path.push_back(i);
            fail(KernelErrc::NotAProposition, "implication operand has type " + core::to_string(s));
          }
        }
        return MonoType::prop();
      case Term::Kind::Forall: {
        check_type(t.annot());
        locals.push_back(t.annot());
        MonoType b = child(t.body(), 0);
        locals.pop_back();
        if (!b.is_prop()) {
          path.push_back(0);
          fail(KernelErrc::NotAProposition, "quantified body has type " + core::to_string(b));
        }
        return MonoType::prop();
      }
    }
    fail(KernelErrc::UnboundVariable, "invalid term");
  }
};

}  // namespace

PolyType infer_type(const core::Signature& sig, const core::TypingContext& ctx, const PolyTerm& t) {
  if (!distinct(t.binders)) throw KernelError(KernelErrc::IllFormedType, "duplicate type binder");
  const auto m = static_cast<std::uint32_t>(t.binders.size());
  Infer in{sig, ctx, m, {}, {}};
  if (t.body.is(Term::Kind::Const)) {
    const PolyType& ty = in.constant(t.body);
    const std::size_t k = t.body.tyargs().size();
    if (k < ty.binders.size()) {
      std::vector<MonoType> args(t.body.tyargs().begin(), t.body.tyargs().end());
      std::vector<std::string> binders = t.binders;
      for (std::size_t i = k; i < ty.binders.size(); ++i) {
        args.push_back(MonoType::bound(static_cast<std::uint32_t>(binders.size())));
        binders.push_back(ty.binders[i]);
      }
      return PolyType(std::move(binders), core::instantiate_bound(ty.body, args));
    }
  }
  MonoType body = in.mono(t.body);
  if (m > 0 && body.is_prop()) return MonoType::prop();
  return PolyType(t.binders, body);
}

MonoType infer_mono(const core::Signature& sig, const core::TypingContext& ctx, const Term& t) {
  Infer in{sig, ctx, 0, {}, {}};
  return in.mono(t);
}

void check_proposition(const core::Signature& sig, const core::TypingContext& ctx, const PolyTerm& t) {
  PolyType ty = infer_type(sig, ctx, t);
  if (!ty.is_mono() || !ty.body.is_prop()) {
    throw KernelError(KernelErrc::NotAProposition, core::to_string(t) + " has type " + core::to_string(ty));
  }
}

void check_definition(const core::Signature& sig, const core::CstDefn& defn) {
  const core::TypingContext empty;
  if (defn.body.binders.size() != defn.type.binders.size()) {
    throw KernelError(KernelErrc::TypeMismatch, "definition of " + defn.name + " abstracts " +
                                                    std::to_string(defn.body.binders.size()) + " types, its type " +
                                                    std::to_string(defn.type.binders.size()));
  }
  if (!distinct(defn.body.binders)) throw KernelError(KernelErrc::IllFormedType, "duplicate type binder");
  Infer in{sig, empty, static_cast<std::uint32_t>(defn.body.binders.size()), {}, {}};
  MonoType found = in.mono(defn.body.body);
  if (!(found == defn.type.body)) {
    throw KernelError(KernelErrc::TypeMismatch, "definition of " + defn.name + " has type " +
                                                    core::to_string(PolyType(defn.type.binders, found)) +
                                                    ", declared " + core::to_string(defn.type));
  }
}

}  // namespace sttx::kernel
