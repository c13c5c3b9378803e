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

#ifndef STTX_CORE_TYPE_HPP
#define STTX_CORE_TYPE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace sttx::core {

struct TypeOpRef {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const TypeOpRef&, const TypeOpRef&) = default;
};

// Monotypes. Type variables come in two flavours: free ones, identified by
// name, and bound ones, identified by their position in the enclosing prenex
// binder list (level 0 is the outermost binder). Bound variables never carry a
// name, so structural equality is alpha-equivalence.
class MonoType {
 public:
  enum class Kind : std::uint8_t { Var, Bound, Prop, Fun, Op };

  MonoType();  // Prop

  static MonoType var(std::string name);
  static MonoType bound(std::uint32_t level);
  static MonoType prop();
  static MonoType fun(MonoType dom, MonoType cod);
  static MonoType op(std::string name, std::vector<MonoType> args = {});

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_bound() const { return kind() == Kind::Bound; }
  bool is_prop() const { return kind() == Kind::Prop; }
  bool is_fun() const { return kind() == Kind::Fun; }
  bool is_op() const { return kind() == Kind::Op; }

  // Var / Op name.
  const std::string& name() const;
  std::uint32_t level() const;
  const MonoType& dom() const;
  const MonoType& cod() const;
  // Op arguments; for Fun the pair {dom, cod}.
  std::span<const MonoType> args() const;

  std::size_t size() const;

  friend bool operator==(const MonoType& a, const MonoType& b);

 private:
  struct Node;
  static const std::shared_ptr<const Node>& prop_node();
  explicit MonoType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// T ::= A | forall X. T, prenex only. Binder names are printing hints.
struct PolyType {
  std::vector<std::string> binders;
  MonoType body;

  PolyType() = default;
  PolyType(MonoType mono) : body(std::move(mono)) {}  // NOLINT: monotypes are polytypes
  PolyType(std::vector<std::string> b, MonoType m) : binders(std::move(b)), body(std::move(m)) {}

  bool is_mono() const { return binders.empty(); }

  friend bool operator==(const PolyType& a, const PolyType& b) {
    return a.binders.size() == b.binders.size() && a.body == b.body;
  }
};

using TypeMap = std::map<std::string, MonoType>;

bool alpha_eq(const MonoType& a, const MonoType& b);
bool alpha_eq(const PolyType& a, const PolyType& b);

// Simultaneous substitution of free type variables.
MonoType subst_ty(const MonoType& t, const TypeMap& map);
PolyType subst_ty(const PolyType& t, const TypeMap& map);

// Replaces bound levels [0, args.size()) by `args`; higher levels shift down.
MonoType instantiate_bound(const MonoType& t, std::span<const MonoType> args);
// Turns free variable `name` into bound level 0, shifting existing levels up.
MonoType abstract_free(const MonoType& t, const std::string& name);

void free_type_vars(const MonoType& t, std::set<std::string>& out);
bool has_bound(const MonoType& t);
std::uint32_t max_bound_plus_one(const MonoType& t);

// Pretty printing; `binder_names[i]` names bound level i.
std::string to_string(const MonoType& t, std::span<const std::string> binder_names = {});
std::string to_string(const PolyType& t);

}  // namespace sttx::core

#endif  // STTX_CORE_TYPE_HPP
