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

#include "sttx/core/rewrite.hpp"

namespace sttx::core {

std::string_view to_string(RewriteErrc e) {
  switch (e) {
    case RewriteErrc::NotARedex:
      return "NotARedex";
    case RewriteErrc::UnknownConstant:
      return "UnknownConstant";
    case RewriteErrc::UndefinedConstant:
      return "UndefinedConstant";
    case RewriteErrc::FuelExhausted:
      return "FuelExhausted";
  }
  return "RewriteErrc?";
}

std::string to_string(const RewriteStep& s) {
  if (s.kind == RewriteStep::Kind::Beta) return "beta@" + to_string(s.position);
  return "delta(" + s.constant + ")@" + to_string(s.position);
}

std::string to_string(const Trace& t) {
  std::string out;
  for (const auto& s : t.steps) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out;
}

namespace {

bool is_delta_redex(const Term& t, const Signature& sig) {
  if (!t.is(Term::Kind::Const)) return false;
  const CstDefn* d = sig.definition(t.name());
  return d != nullptr && d->type.binders.size() == t.tyargs().size();
}

bool is_beta_redex(const Term& t) { return t.is(Term::Kind::App) && t.fn().is(Term::Kind::Abs); }

}  // namespace

Term contract(const Term& t, RewriteStep::Kind kind, const std::string& constant, const Signature& sig) {
  if (kind == RewriteStep::Kind::Beta) {
    if (!is_beta_redex(t)) throw RewriteError(RewriteErrc::NotARedex, "no beta redex at " + to_string(t));
    return open(t.fn().body(), t.arg());
  }
  if (!sig.contains(constant) || !sig.constant_type(constant)) {
    throw RewriteError(RewriteErrc::UnknownConstant, constant);
  }
  const CstDefn* d = sig.definition(constant);
  if (!d) throw RewriteError(RewriteErrc::UndefinedConstant, constant + " is declared, not defined");
  if (!t.is(Term::Kind::Const) || t.name() != constant || t.tyargs().size() != d->type.binders.size()) {
    throw RewriteError(RewriteErrc::NotARedex, "no delta(" + constant + ") redex at " + to_string(t));
  }
  return instantiate_bound_types(d->body.body, t.tyargs());
}

Term apply_step(const Term& t, const RewriteStep& s, const Signature& sig) {
  auto sub = subterm_at(t, s.position);
  if (!sub) throw RewriteError(RewriteErrc::NotARedex, "position " + to_string(s.position) + " out of range");
  return replace_at(t, s.position, contract(*sub, s.kind, s.constant, sig));
}

Term replay(const Term& t, const Trace& trace, const Signature& sig) {
  Term cur = t;
  for (const auto& s : trace.steps) cur = apply_step(cur, s, sig);
  return cur;
}

namespace {

bool find_at(const Term& t, const Signature& sig, Position& path, RewriteStep& out) {
  if (is_beta_redex(t)) {
    out = RewriteStep::beta(path);
    return true;
  }
  if (is_delta_redex(t, sig)) {
    out = RewriteStep::delta(path, t.name());
    return true;
  }
  for (std::size_t i = 0; i < t.num_children(); ++i) {
    path.push_back(static_cast<std::uint8_t>(i));
    if (find_at(t.child(i), sig, path, out)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<RewriteStep> find_redex(const Term& t, const Signature& sig) {
  Position path;
  RewriteStep step;
  if (find_at(t, sig, path, step)) return step;
  return std::nullopt;
}

Normalized normalize(const Term& t, const Signature& sig, std::size_t fuel) {
  Normalized out{t, {}};
  while (auto step = find_redex(out.term, sig)) {
    if (out.trace.size() >= fuel) {
      throw RewriteError(RewriteErrc::FuelExhausted, "more than " + std::to_string(fuel) + " steps");
    }
    out.term = apply_step(out.term, *step, sig);
    out.trace.steps.push_back(std::move(*step));
  }
  return out;
}

PolyTerm normal_form(const PolyTerm& t, const Signature& sig, std::size_t fuel) {
  return PolyTerm(t.binders, normalize(t.body, sig, fuel).term);
}

std::optional<std::pair<Trace, Trace>> conv(const Term& t, const Term& u, const Signature& sig, std::size_t fuel) {
  auto a = normalize(t, sig, fuel);
  auto b = normalize(u, sig, fuel);
  if (!(a.term == b.term)) return std::nullopt;
  return std::make_pair(std::move(a.trace), std::move(b.trace));
}

std::optional<std::pair<Trace, Trace>> conv(const PolyTerm& t, const PolyTerm& u, const Signature& sig,
                                            std::size_t fuel) {
  if (t.binders.size() != u.binders.size()) return std::nullopt;
  return conv(t.body, u.body, sig, fuel);
}

}  // namespace sttx::core
