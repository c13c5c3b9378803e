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

#include "sttx/core/type.hpp"

#include <algorithm>
#include <cassert>

#include "names.hpp"

namespace sttx::core {

struct MonoType::Node {
  Kind kind;
  std::string name;
  std::uint32_t level = 0;
  std::vector<MonoType> args;
};

const std::shared_ptr<const MonoType::Node>& MonoType::prop_node() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Prop, {}, 0, {}});
  return node;
}

MonoType::MonoType() : node_(prop_node()) {}

MonoType MonoType::var(std::string name) {
  return MonoType(std::make_shared<const Node>(Node{Kind::Var, std::move(name), 0, {}}));
}

MonoType MonoType::bound(std::uint32_t level) {
  return MonoType(std::make_shared<const Node>(Node{Kind::Bound, {}, level, {}}));
}

MonoType MonoType::prop() { return MonoType(prop_node()); }

MonoType MonoType::fun(MonoType dom, MonoType cod) {
  return MonoType(std::make_shared<const Node>(Node{Kind::Fun, {}, 0, {std::move(dom), std::move(cod)}}));
}

MonoType MonoType::op(std::string name, std::vector<MonoType> args) {
  return MonoType(std::make_shared<const Node>(Node{Kind::Op, std::move(name), 0, std::move(args)}));
}

MonoType::Kind MonoType::kind() const { return node_->kind; }
const std::string& MonoType::name() const { return node_->name; }
std::uint32_t MonoType::level() const { return node_->level; }
const MonoType& MonoType::dom() const { return node_->args[0]; }
const MonoType& MonoType::cod() const { return node_->args[1]; }
std::span<const MonoType> MonoType::args() const { return node_->args; }

std::size_t MonoType::size() const {
  std::size_t n = 1;
  for (const auto& a : node_->args) n += a.size();
  return n;
}

bool operator==(const MonoType& a, const MonoType& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case MonoType::Kind::Var:
      return a.node_->name == b.node_->name;
    case MonoType::Kind::Bound:
      return a.node_->level == b.node_->level;
    case MonoType::Kind::Prop:
      return true;
    case MonoType::Kind::Fun:
    case MonoType::Kind::Op:
      return a.node_->name == b.node_->name && a.node_->args == b.node_->args;
  }
  return false;
}

bool alpha_eq(const MonoType& a, const MonoType& b) { return a == b; }
bool alpha_eq(const PolyType& a, const PolyType& b) { return a == b; }

namespace {

template <class F>
MonoType map_leaves(const MonoType& t, const F& leaf) {
  switch (t.kind()) {
    case MonoType::Kind::Var:
    case MonoType::Kind::Bound:
      return leaf(t);
    case MonoType::Kind::Prop:
      return t;
    case MonoType::Kind::Fun:
      return MonoType::fun(map_leaves(t.dom(), leaf), map_leaves(t.cod(), leaf));
    case MonoType::Kind::Op: {
      std::vector<MonoType> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(map_leaves(a, leaf));
      return MonoType::op(t.name(), std::move(args));
    }
  }
  return t;
}

}  // namespace

MonoType subst_ty(const MonoType& t, const TypeMap& map) {
  if (map.empty()) return t;
  return map_leaves(t, [&](const MonoType& leaf) {
    if (leaf.is_var()) {
      if (auto it = map.find(leaf.name()); it != map.end()) return it->second;
    }
    return leaf;
  });
}

// Bound levels are nameless, so no image can be captured.
PolyType subst_ty(const PolyType& t, const TypeMap& map) { return PolyType(t.binders, subst_ty(t.body, map)); }

MonoType instantiate_bound(const MonoType& t, std::span<const MonoType> args) {
  if (args.empty()) return t;
  const auto n = static_cast<std::uint32_t>(args.size());
  return map_leaves(t, [&](const MonoType& leaf) {
    if (!leaf.is_bound()) return leaf;
    if (leaf.level() < n) return args[leaf.level()];
    return MonoType::bound(leaf.level() - n);
  });
}

MonoType abstract_free(const MonoType& t, const std::string& name) {
  return map_leaves(t, [&](const MonoType& leaf) {
    if (leaf.is_bound()) return MonoType::bound(leaf.level() + 1);
    if (leaf.name() == name) return MonoType::bound(0);
    return leaf;
  });
}

void free_type_vars(const MonoType& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) free_type_vars(a, out);
}

bool has_bound(const MonoType& t) {
  if (t.is_bound()) return true;
  return std::any_of(t.args().begin(), t.args().end(), [](const MonoType& a) { return has_bound(a); });
}

std::uint32_t max_bound_plus_one(const MonoType& t) {
  if (t.is_bound()) return t.level() + 1;
  std::uint32_t m = 0;
  for (const auto& a : t.args()) m = std::max(m, max_bound_plus_one(a));
  return m;
}

namespace {

void print(const MonoType& t, std::span<const std::string> names, bool atomic, std::string& out) {
  switch (t.kind()) {
    case MonoType::Kind::Var:
      out += t.name();
      return;
    case MonoType::Kind::Bound:
      if (t.level() < names.size()) {
        out += names[t.level()];
      } else {
        out += "?" + std::to_string(t.level());
      }
      return;
    case MonoType::Kind::Prop:
      out += "Prop";
      return;
    case MonoType::Kind::Fun:
      if (atomic) out += '(';
      print(t.dom(), names, true, out);
      out += " -> ";
      print(t.cod(), names, false, out);
      if (atomic) out += ')';
      return;
    case MonoType::Kind::Op:
      if (t.args().empty()) {
        out += t.name();
        return;
      }
      if (atomic) out += '(';
      out += t.name();
      for (const auto& a : t.args()) {
        out += ' ';
        print(a, names, true, out);
      }
      if (atomic) out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const MonoType& t, std::span<const std::string> binder_names) {
  std::string out;
  print(t, binder_names, false, out);
  return out;
}

std::string to_string(const PolyType& t) {
  std::set<std::string> used;
  free_type_vars(t.body, used);
  std::vector<std::string> names = detail::fresh_names(t.binders, used, "X");
  std::string out;
  for (const auto& n : names) out += "forall " + n + ". ";
  out += to_string(t.body, names);
  return out;
}

}  // namespace sttx::core
