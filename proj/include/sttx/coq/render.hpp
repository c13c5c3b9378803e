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

#ifndef STTX_COQ_RENDER_HPP
#define STTX_COQ_RENDER_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sttx/core/signature.hpp"
#include "sttx/core/term.hpp"
#include "sttx/core/type.hpp"
#include "sttx/kernel/proof.hpp"
#include "sttx/kernel/theory.hpp"

namespace sttx::coq {

bool is_keyword(std::string_view s);

// A lexically valid Coq identifier for `name`; not necessarily unique.
std::string sanitize(std::string_view name);

// Injective assignment of Coq identifiers to global names, first come first
// served: a clash with an earlier name or a reserved word gets a numeric suffix.
class Names {
 public:
  explicit Names(std::set<std::string> reserved = {});

  const std::string& add(const std::string& name);
  // The identifier of an added name, else its sanitized form.
  std::string operator()(const std::string& name) const;
  bool taken(const std::string& ident) const { return taken_.count(ident) > 0; }
  // Names whose identifier differs from the source, in insertion order.
  std::vector<std::pair<std::string, std::string>> renamed() const;

 private:
  std::set<std::string> taken_;
  std::map<std::string, std::string> map_;
  std::vector<std::string> order_;
};

// Pretty-printer over one signature. A declared constant `eq` of type
// forall X. X -> X -> Prop is read as Coq's equality and printed infix.
class Renderer {
 public:
  explicit Renderer(const core::Signature& sig, const std::vector<std::string>& fact_names = {});

  std::string type(const core::PolyType& t) const;
  std::string type(const core::MonoType& t, const std::vector<std::string>& binders = {}) const;
  // Propositions print their type binders as products, other terms as functions.
  std::string statement(const core::PolyTerm& t) const;
  std::string term(const core::PolyTerm& t) const;
  std::string proof(const kernel::ProofTerm& p) const;

  std::string parameter(const std::string& constant) const;
  std::string type_parameter(const core::TypeOpRef& op) const;
  std::string definition(const std::string& constant) const;
  std::string axiom(const std::string& name, const core::PolyTerm& statement) const;
  std::string theorem(const std::string& name, const kernel::Theorem& th) const;

  bool is_equality(const std::string& constant) const;
  const Names& names() const { return names_; }

 private:
  struct Scope;
  const core::Signature& sig_;
  Names names_;
};

std::string render_type(const core::PolyType& t, const core::Signature& sig = {});

// The whole theory: a module type of parameters and axioms (with the
// definitions they mention) and a functor over it holding the rest.
std::string render_theory(const kernel::Theory& th, const std::string& name);

}  // namespace sttx::coq

#endif  // STTX_COQ_RENDER_HPP
