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

#ifndef STTX_CORE_TERM_HPP
#define STTX_CORE_TERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sttx/core/type.hpp"

namespace sttx::core {

// Locally nameless monoterms. Term binders (lambda and forall) use de Bruijn
// indices counted from the innermost binder; free variables carry names. The
// hint stored on a binder only matters for printing, so operator== is
// alpha-equivalence.
class Term {
 public:
  enum class Kind : std::uint8_t { Bound, Free, Const, Abs, App, Imp, Forall };

  Term() = default;  // empty handle; only valid() may be called on it

  static Term bound(std::uint32_t index);
  static Term free(std::string name);
  static Term cnst(std::string name, std::vector<MonoType> tyargs = {});
  // `body` refers to the new binder as index 0.
  static Term abs(std::string hint, MonoType annot, Term body);
  static Term app(Term fn, Term arg);
  static Term imp(Term lhs, Term rhs);
  static Term forall(std::string hint, MonoType annot, Term body);

  // Binders over a named free variable, closing it in `body`.
  static Term lam(const std::string& var, MonoType annot, const Term& body);
  static Term all(const std::string& var, MonoType annot, const Term& body);
  static Term apps(Term fn, std::initializer_list<Term> args);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  std::uint32_t index() const;
  // Free variable name, constant name, or binder hint.
  const std::string& name() const;
  std::span<const MonoType> tyargs() const;
  const MonoType& annot() const;
  const Term& body() const;
  const Term& fn() const;
  const Term& arg() const;
  const Term& lhs() const;
  const Term& rhs() const;

  // Children in position order: App {fn, arg}, Imp {lhs, rhs}, Abs/Forall {body}.
  std::size_t num_children() const;
  const Term& child(std::size_t i) const;

  std::size_t size() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// tau ::= t | forall X. tau. Whether the binders read as type abstraction
// (definition bodies) or type quantification (propositions) depends on use.
struct PolyTerm {
  std::vector<std::string> binders;
  Term body;

  PolyTerm() = default;
  PolyTerm(Term t) : body(std::move(t)) {}  // NOLINT: monoterms are polyterms
  PolyTerm(std::vector<std::string> b, Term t) : binders(std::move(b)), body(std::move(t)) {}

  bool is_mono() const { return binders.empty(); }

  friend bool operator==(const PolyTerm& a, const PolyTerm& b) {
    return a.binders.size() == b.binders.size() && a.body == b.body;
  }
};

bool alpha_eq(const Term& a, const Term& b);
bool alpha_eq(const PolyTerm& a, const PolyTerm& b);

Term subst_ty(const Term& t, const TypeMap& map);
PolyTerm subst_ty(const PolyTerm& t, const TypeMap& map);
Term instantiate_bound_types(const Term& t, std::span<const MonoType> args);

// forall X. tau with the free type variable `name` bound by a new outermost binder.
PolyTerm abstract_type(const PolyTerm& t, const std::string& name);
// Drops the outermost type binder, replacing it by `image`.
PolyTerm open_type(const PolyTerm& t, const MonoType& image);
// Drops the outermost type binder, replacing it by the free variable `name`.
PolyTerm open_type(const PolyTerm& t, const std::string& name);

// Replaces de Bruijn index 0 of a binder body by `image`.
Term open(const Term& body, const Term& image);
// Abstracts free variable `name` into index 0 (the result is a binder body).
Term close(const Term& t, const std::string& name);
// Capture-avoiding substitution of a free variable.
Term subst_tm(const Term& t, const std::string& var, const Term& image);

void free_vars(const Term& t, std::set<std::string>& out);
std::set<std::string> free_vars(const Term& t);
void free_type_vars(const Term& t, std::set<std::string>& out);
bool is_locally_closed(const Term& t);

// Paths of child indices, see Term::child.
using Position = std::vector<std::uint8_t>;

std::optional<Term> subterm_at(const Term& t, std::span<const std::uint8_t> pos);
// Replaces the subterm at `pos`; the replacement lives in the same binder scope.
Term replace_at(const Term& t, std::span<const std::uint8_t> pos, const Term& replacement);

std::string to_string(const Term& t, std::span<const std::string> type_binders = {});
std::string to_string(const PolyTerm& t);
std::string to_string(const Position& p);

}  // namespace sttx::core

#endif  // STTX_CORE_TERM_HPP
