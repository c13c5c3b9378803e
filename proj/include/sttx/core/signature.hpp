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

#ifndef STTX_CORE_SIGNATURE_HPP
#define STTX_CORE_SIGNATURE_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sttx/core/term.hpp"
#include "sttx/core/type.hpp"

namespace sttx::core {

struct TyOpDecl {
  TypeOpRef op;
};

struct CstDecl {
  std::string name;
  PolyType type;
};

// The body's type binders are the type's binders, in the same order.
struct CstDefn {
  std::string name;
  PolyType type;
  PolyTerm body;
};

using SigEntry = std::variant<TyOpDecl, CstDecl, CstDefn>;

const std::string& entry_name(const SigEntry& e);

// Ordered constant context. Adding never validates; kernel::wf_signature
// does. Lookups resolve to the first entry carrying a name.
class Signature {
 public:
  void add(SigEntry e);
  void add_type_op(std::string name, std::size_t arity) { add(TyOpDecl{{std::move(name), arity}}); }
  void declare(std::string name, PolyType type) { add(CstDecl{std::move(name), std::move(type)}); }
  void define(std::string name, PolyType type, PolyTerm body) {
    add(CstDefn{std::move(name), std::move(type), std::move(body)});
  }

  std::span<const SigEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // First n entries.
  Signature prefix(std::size_t n) const;

  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  std::optional<TypeOpRef> type_op(const std::string& name) const;
  // Type of a declared or defined constant.
  const PolyType* constant_type(const std::string& name) const;
  const CstDefn* definition(const std::string& name) const;

 private:
  std::vector<SigEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

// Gamma: type variables and typed term variables, in order.
class TypingContext {
 public:
  struct Entry {
    std::string name;
    std::optional<MonoType> type;  // absent for type variables
  };

  void push_type(std::string name) { entries_.push_back({std::move(name), std::nullopt}); }
  void push_term(std::string name, MonoType type) { entries_.push_back({std::move(name), std::move(type)}); }
  void pop() { entries_.pop_back(); }

  std::span<const Entry> entries() const { return entries_; }
  bool has_type_var(const std::string& name) const;
  // Innermost binding of a term variable.
  const MonoType* term_type(const std::string& name) const;
  bool binds(const std::string& name) const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace sttx::core

#endif  // STTX_CORE_SIGNATURE_HPP
