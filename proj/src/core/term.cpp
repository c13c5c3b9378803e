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

#include "sttx/core/term.hpp"

#include <cassert>

#include "names.hpp"

namespace sttx::core {

struct Term::Node {
  Kind kind;
  std::uint32_t index = 0;
  std::string name;
  std::vector<MonoType> tyargs;
  MonoType annot;
  Term a;
  Term b;
};

Term Term::bound(std::uint32_t index) { return Term(std::make_shared<const Node>(Node{Kind::Bound, index, {}, {}, {}, {}, {}})); }

Term Term::free(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Free, 0, std::move(name), {}, {}, {}, {}}));
}

Term Term::cnst(std::string name, std::vector<MonoType> tyargs) {
  return Term(std::make_shared<const Node>(Node{Kind::Const, 0, std::move(name), std::move(tyargs), {}, {}, {}}));
}

Term Term::abs(std::string hint, MonoType annot, Term body) {
  return Term(std::make_shared<const Node>(Node{Kind::Abs, 0, std::move(hint), {}, std::move(annot), std::move(body), {}}));
}

Term Term::app(Term fn, Term arg) {
  return Term(std::make_shared<const Node>(Node{Kind::App, 0, {}, {}, {}, std::move(fn), std::move(arg)}));
}

Term Term::imp(Term lhs, Term rhs) {
  return Term(std::make_shared<const Node>(Node{Kind::Imp, 0, {}, {}, {}, std::move(lhs), std::move(rhs)}));
}

Term Term::forall(std::string hint, MonoType annot, Term body) {
  return Term(
      std::make_shared<const Node>(Node{Kind::Forall, 0, std::move(hint), {}, std::move(annot), std::move(body), {}}));
}

Term Term::lam(const std::string& var, MonoType annot, const Term& body) {
  return abs(var, std::move(annot), close(body, var));
}

Term Term::all(const std::string& var, MonoType annot, const Term& body) {
  return forall(var, std::move(annot), close(body, var));
}

Term Term::apps(Term fn, std::initializer_list<Term> args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}

Term::Kind Term::kind() const { return node_->kind; }
std::uint32_t Term::index() const { return node_->index; }
const std::string& Term::name() const { return node_->name; }
std::span<const MonoType> Term::tyargs() const { return node_->tyargs; }
const MonoType& Term::annot() const { return node_->annot; }
const Term& Term::body() const { return node_->a; }
const Term& Term::fn() const { return node_->a; }
const Term& Term::arg() const { return node_->b; }
const Term& Term::lhs() const { return node_->a; }
const Term& Term::rhs() const { return node_->b; }

std::size_t Term::num_children() const {
  switch (node_->kind) {
    case Kind::App:
    case Kind::Imp:
      return 2;
    case Kind::Abs:
    case Kind::Forall:
      return 1;
    default:
      return 0;
  }
}

const Term& Term::child(std::size_t i) const { return i == 0 ? node_->a : node_->b; }

std::size_t Term::size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < num_children(); ++i) n += child(i).size();
  return n;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Term::Kind::Bound:
      return x.index == y.index;
    case Term::Kind::Free:
      return x.name == y.name;
    case Term::Kind::Const:
      return x.name == y.name && x.tyargs == y.tyargs;
    case Term::Kind::Abs:
    case Term::Kind::Forall:
      return x.annot == y.annot && x.a == y.a;
    case Term::Kind::App:
    case Term::Kind::Imp:
      return x.a == y.a && x.b == y.b;
  }
  return false;
}

bool alpha_eq(const Term& a, const Term& b) { return a == b; }
bool alpha_eq(const PolyTerm& a, const PolyTerm& b) { return a == b; }

namespace {

// Rebuilds `t` bottom-up. `leaf(t, depth)` handles Bound/Free/Const nodes;
// `ty` maps binder annotations.
template <class Leaf, class Ty>
Term rebuild(const Term& t, std::uint32_t depth, const Leaf& leaf, const Ty& ty) {
  switch (t.kind()) {
    case Term::Kind::Bound:
    case Term::Kind::Free:
    case Term::Kind::Const:
      return leaf(t, depth);
    case Term::Kind::Abs:
      return Term::abs(t.name(), ty(t.annot()), rebuild(t.body(), depth + 1, leaf, ty));
    case Term::Kind::Forall:
      return Term::forall(t.name(), ty(t.annot()), rebuild(t.body(), depth + 1, leaf, ty));
    case Term::Kind::App:
      return Term::app(rebuild(t.fn(), depth, leaf, ty), rebuild(t.arg(), depth, leaf, ty));
    case Term::Kind::Imp:
      return Term::imp(rebuild(t.lhs(), depth, leaf, ty), rebuild(t.rhs(), depth, leaf, ty));
  }
  return t;
}

const auto same_type = [](const MonoType& m) { return m; };

Term shift(const Term& t, std::uint32_t by, std::uint32_t cutoff = 0) {
  if (by == 0) return t;
  return rebuild(
      t, cutoff,
      [by](const Term& leaf, std::uint32_t depth) {
        if (leaf.is(Term::Kind::Bound) && leaf.index() >= depth) return Term::bound(leaf.index() + by);
        return leaf;
      },
      same_type);
}

template <class F>
Term map_types(const Term& t, const F& f) {
  return rebuild(
      t, 0,
      [&](const Term& leaf, std::uint32_t) {
        if (!leaf.is(Term::Kind::Const) || leaf.tyargs().empty()) return leaf;
        std::vector<MonoType> args;
        for (const auto& a : leaf.tyargs()) args.push_back(f(a));
        return Term::cnst(leaf.name(), std::move(args));
      },
      f);
}

}  // namespace

Term subst_ty(const Term& t, const TypeMap& map) {
  if (map.empty()) return t;
  return map_types(t, [&](const MonoType& m) { return subst_ty(m, map); });
}

PolyTerm subst_ty(const PolyTerm& t, const TypeMap& map) { return PolyTerm(t.binders, subst_ty(t.body, map)); }

Term instantiate_bound_types(const Term& t, std::span<const MonoType> args) {
  if (args.empty()) return t;
  return map_types(t, [&](const MonoType& m) { return instantiate_bound(m, args); });
}

PolyTerm abstract_type(const PolyTerm& t, const std::string& name) {
  std::vector<std::string> binders;
  binders.reserve(t.binders.size() + 1);
  binders.push_back(name);
  binders.insert(binders.end(), t.binders.begin(), t.binders.end());
  return PolyTerm(std::move(binders), map_types(t.body, [&](const MonoType& m) { return abstract_free(m, name); }));
}

PolyTerm open_type(const PolyTerm& t, const MonoType& image) {
  assert(!t.binders.empty());
  const MonoType args[] = {image};
  return PolyTerm(std::vector<std::string>(t.binders.begin() + 1, t.binders.end()),
                  instantiate_bound_types(t.body, args));
}

PolyTerm open_type(const PolyTerm& t, const std::string& name) { return open_type(t, MonoType::var(name)); }

Term open(const Term& body, const Term& image) {
  return rebuild(
      body, 0,
      [&](const Term& leaf, std::uint32_t depth) {
        if (!leaf.is(Term::Kind::Bound)) return leaf;
        if (leaf.index() == depth) return shift(image, depth);
        if (leaf.index() > depth) return Term::bound(leaf.index() - 1);
        return leaf;
      },
      same_type);
}

Term close(const Term& t, const std::string& name) {
  return rebuild(
      t, 0,
      [&](const Term& leaf, std::uint32_t depth) {
        if (leaf.is(Term::Kind::Free) && leaf.name() == name) return Term::bound(depth);
        if (leaf.is(Term::Kind::Bound) && leaf.index() >= depth) return Term::bound(leaf.index() + 1);
        return leaf;
      },
      same_type);
}

Term subst_tm(const Term& t, const std::string& var, const Term& image) {
  return rebuild(
      t, 0,
      [&](const Term& leaf, std::uint32_t depth) {
        if (leaf.is(Term::Kind::Free) && leaf.name() == var) return shift(image, depth);
        return leaf;
      },
      same_type);
}

void free_vars(const Term& t, std::set<std::string>& out) {
  if (t.is(Term::Kind::Free)) {
    out.insert(t.name());
    return;
  }
  for (std::size_t i = 0; i < t.num_children(); ++i) free_vars(t.child(i), out);
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  free_vars(t, out);
  return out;
}

void free_type_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Const:
      for (const auto& a : t.tyargs()) free_type_vars(a, out);
      return;
    case Term::Kind::Abs:
    case Term::Kind::Forall:
      free_type_vars(t.annot(), out);
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < t.num_children(); ++i) free_type_vars(t.child(i), out);
}

namespace {
bool closed_at(const Term& t, std::uint32_t depth) {
  switch (t.kind()) {
    case Term::Kind::Bound:
      return t.index() < depth;
    case Term::Kind::Abs:
    case Term::Kind::Forall:
      return closed_at(t.body(), depth + 1);
    case Term::Kind::App:
    case Term::Kind::Imp:
      return closed_at(t.child(0), depth) && closed_at(t.child(1), depth);
    default:
      return true;
  }
}
}  // namespace

bool is_locally_closed(const Term& t) { return closed_at(t, 0); }

std::optional<Term> subterm_at(const Term& t, std::span<const std::uint8_t> pos) {
  const Term* cur = &t;
  for (auto i : pos) {
    if (i >= cur->num_children()) return std::nullopt;
    cur = &cur->child(i);
  }
  return *cur;
}

Term replace_at(const Term& t, std::span<const std::uint8_t> pos, const Term& replacement) {
  if (pos.empty()) return replacement;
  const auto rest = pos.subspan(1);
  switch (t.kind()) {
    case Term::Kind::Abs:
      return Term::abs(t.name(), t.annot(), replace_at(t.body(), rest, replacement));
    case Term::Kind::Forall:
      return Term::forall(t.name(), t.annot(), replace_at(t.body(), rest, replacement));
    case Term::Kind::App:
      return pos[0] == 0 ? Term::app(replace_at(t.fn(), rest, replacement), t.arg())
                         : Term::app(t.fn(), replace_at(t.arg(), rest, replacement));
    case Term::Kind::Imp:
      return pos[0] == 0 ? Term::imp(replace_at(t.lhs(), rest, replacement), t.rhs())
                         : Term::imp(t.lhs(), replace_at(t.rhs(), rest, replacement));
    default:
      return t;
  }
}

namespace {

enum Prec { kTop = 0, kImpLhs = 1, kAppFn = 2, kAtom = 3 };

struct Printer {
  std::span<const std::string> types;
  std::vector<std::string> scope;  // innermost last
  std::set<std::string> used;
  std::string out;

  void print(const Term& t, int prec) {
    switch (t.kind()) {
      case Term::Kind::Bound:
        if (t.index() < scope.size()) {
          out += scope[scope.size() - 1 - t.index()];
        } else {
          out += "#" + std::to_string(t.index());
        }
        return;
      case Term::Kind::Free:
        out += t.name();
        return;
      case Term::Kind::Const:
        out += t.name();
        if (!t.tyargs().empty()) {
          out += '[';
          for (std::size_t i = 0; i < t.tyargs().size(); ++i) {
            if (i) out += ", ";
            out += to_string(t.tyargs()[i], types);
          }
          out += ']';
        }
        return;
      case Term::Kind::Abs:
      case Term::Kind::Forall: {
        if (prec > kTop) out += '(';
        auto saved = used;
        std::string name = detail::fresh_name(t.name(), used, "x");
        out += t.is(Term::Kind::Abs) ? "\\" : "!";
        out += name + ":" + to_string(t.annot(), types) + ". ";
        scope.push_back(name);
        print(t.body(), kTop);
        scope.pop_back();
        used = std::move(saved);
        if (prec > kTop) out += ')';
        return;
      }
      case Term::Kind::Imp:
        if (prec > kTop) out += '(';
        print(t.lhs(), kImpLhs);
        out += " => ";
        print(t.rhs(), kTop);
        if (prec > kTop) out += ')';
        return;
      case Term::Kind::App:
        if (prec > kAppFn) out += '(';
        print(t.fn(), kAppFn);
        out += ' ';
        print(t.arg(), kAtom);
        if (prec > kAppFn) out += ')';
        return;
    }
  }
};

}  // namespace

std::string to_string(const Term& t, std::span<const std::string> type_binders) {
  Printer p{type_binders, {}, free_vars(t), {}};
  p.print(t, kTop);
  return p.out;
}

std::string to_string(const PolyTerm& t) {
  std::set<std::string> used;
  free_type_vars(t.body, used);
  std::vector<std::string> names = detail::fresh_names(t.binders, used, "X");
  std::string out;
  for (const auto& n : names) out += "forall " + n + ". ";
  out += to_string(t.body, names);
  return out;
}

std::string to_string(const Position& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

}  // namespace sttx::core
