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

#include "sttx/ot/term.hpp"

#include <algorithm>

namespace sttx::ot {

struct OtType::Node {
  Kind kind;
  std::string name;
  std::vector<OtType> args;
};

OtType OtType::var(std::string name) { return OtType(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}})); }

OtType OtType::op(std::string name, std::vector<OtType> args) {
  return OtType(std::make_shared<const Node>(Node{Kind::Op, std::move(name), std::move(args)}));
}

OtType OtType::boolean() {
  static const OtType b = op(kBool);
  return b;
}

OtType OtType::fun(OtType dom, OtType cod) { return op(kFun, {std::move(dom), std::move(cod)}); }

OtType::Kind OtType::kind() const { return node_->kind; }
bool OtType::is_fun() const { return node_->kind == Kind::Op && node_->args.size() == 2 && node_->name == kFun; }
bool OtType::is_bool() const { return node_->kind == Kind::Op && node_->args.empty() && node_->name == kBool; }
const std::string& OtType::name() const { return node_->name; }
const std::vector<OtType>& OtType::args() const { return node_->args; }
const OtType& OtType::dom() const { return node_->args.at(0); }
const OtType& OtType::cod() const { return node_->args.at(1); }

namespace {

int compare_types(const OtType& a, const OtType& b) {
  if (a.valid() != b.valid()) return a.valid() ? 1 : -1;
  if (!a.valid()) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (int c = a.name().compare(b.name())) return c < 0 ? -1 : 1;
  if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (int c = compare_types(a.args()[i], b.args()[i])) return c;
  }
  return 0;
}

}  // namespace

bool operator==(const OtType& a, const OtType& b) { return a.node_ == b.node_ || compare_types(a, b) == 0; }
bool operator<(const OtType& a, const OtType& b) { return compare_types(a, b) < 0; }

struct OtTerm::Node {
  Kind kind;
  std::string name;
  OtType type;  // of the node
  OtType var_type;  // Abs only
  OtTerm a;
  OtTerm b;
  std::size_t size;
};

OtTerm OtTerm::var(std::string name, OtType type) {
  return OtTerm(std::make_shared<const Node>(Node{Kind::Var, std::move(name), std::move(type), {}, {}, {}, 1}));
}

OtTerm OtTerm::cnst(std::string name, OtType type) {
  return OtTerm(std::make_shared<const Node>(Node{Kind::Const, std::move(name), std::move(type), {}, {}, {}, 1}));
}

OtTerm OtTerm::app(OtTerm fn, OtTerm arg) {
  const OtType& ft = fn.type();
  if (!ft.is_fun()) throw OtTypeError("application of a non-function " + to_string(fn) + " : " + to_string(ft));
  if (!(ft.dom() == arg.type())) {
    throw OtTypeError("argument " + to_string(arg) + " : " + to_string(arg.type()) + " does not fit " +
                      to_string(fn) + " : " + to_string(ft));
  }
  std::size_t n = 1 + fn.size() + arg.size();
  OtType cod = ft.cod();
  return OtTerm(std::make_shared<const Node>(Node{Kind::App, {}, std::move(cod), {}, std::move(fn), std::move(arg), n}));
}

OtTerm OtTerm::abs(OtVar v, OtTerm body) {
  OtType t = OtType::fun(v.type, body.type());
  std::size_t n = 1 + body.size();
  return OtTerm(std::make_shared<const Node>(
      Node{Kind::Abs, std::move(v.name), std::move(t), std::move(v.type), std::move(body), {}, n}));
}

OtTerm OtTerm::apps(OtTerm fn, std::initializer_list<OtTerm> args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}

OtTerm OtTerm::eq_const(const OtType& a) {
  return cnst(kEq, OtType::fun(a, OtType::fun(a, OtType::boolean())));
}

OtTerm OtTerm::eq(OtTerm lhs, OtTerm rhs) {
  OtTerm c = eq_const(lhs.type());
  return app(app(std::move(c), std::move(lhs)), std::move(rhs));
}

OtTerm::Kind OtTerm::kind() const { return node_->kind; }
const std::string& OtTerm::name() const { return node_->name; }
const OtType& OtTerm::type() const { return node_->type; }
OtVar OtTerm::bound() const { return {node_->name, node_->var_type}; }
const OtTerm& OtTerm::body() const { return node_->a; }
const OtTerm& OtTerm::fn() const { return node_->a; }
const OtTerm& OtTerm::arg() const { return node_->b; }
std::size_t OtTerm::size() const { return node_->size; }

bool OtTerm::is_eq() const {
  return kind() == Kind::App && fn().kind() == Kind::App && fn().fn().kind() == Kind::Const && fn().fn().name() == kEq;
}

const OtTerm& OtTerm::lhs() const {
  if (!is_eq()) throw OtTypeError("not an equation: " + to_string(*this));
  return fn().arg();
}

const OtTerm& OtTerm::rhs() const {
  if (!is_eq()) throw OtTypeError("not an equation: " + to_string(*this));
  return arg();
}

namespace {

struct AlphaEnv {
  std::vector<OtVar> left;
  std::vector<OtVar> right;
};

// Index of the innermost binder for v, counted from the innermost, or -1.
long lookup(const std::vector<OtVar>& env, const std::string& name, const OtType& type) {
  for (std::size_t i = env.size(); i-- > 0;) {
    if (env[i].name == name && env[i].type == type) return static_cast<long>(env.size() - 1 - i);
  }
  return -1;
}

int cmp(int c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

int compare_terms(const OtTerm& a, const OtTerm& b, AlphaEnv& env) {
  if (env.left.empty() && a.same_node(b)) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case OtTerm::Kind::Var: {
      long ia = lookup(env.left, a.name(), a.type());
      long ib = lookup(env.right, b.name(), b.type());
      if (ia >= 0 || ib >= 0) {
        if (ia < 0) return 1;
        if (ib < 0) return -1;
        return ia == ib ? 0 : (ia < ib ? -1 : 1);
      }
      if (int c = cmp(a.name().compare(b.name()))) return c;
      return compare_types(a.type(), b.type());
    }
    case OtTerm::Kind::Const:
      if (int c = cmp(a.name().compare(b.name()))) return c;
      return compare_types(a.type(), b.type());
    case OtTerm::Kind::App:
      if (int c = compare_terms(a.fn(), b.fn(), env)) return c;
      return compare_terms(a.arg(), b.arg(), env);
    case OtTerm::Kind::Abs: {
      OtVar va = a.bound();
      OtVar vb = b.bound();
      if (int c = compare_types(va.type, vb.type)) return c;
      env.left.push_back(std::move(va));
      env.right.push_back(std::move(vb));
      int c = compare_terms(a.body(), b.body(), env);
      env.left.pop_back();
      env.right.pop_back();
      return c;
    }
  }
  return 0;
}

void collect_free(const OtTerm& t, std::vector<OtVar>& bound, std::set<OtVar>& out) {
  switch (t.kind()) {
    case OtTerm::Kind::Var:
      if (lookup(bound, t.name(), t.type()) < 0) out.insert({t.name(), t.type()});
      return;
    case OtTerm::Kind::Const:
      return;
    case OtTerm::Kind::App:
      collect_free(t.fn(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    case OtTerm::Kind::Abs:
      bound.push_back(t.bound());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

int alpha_compare(const OtTerm& a, const OtTerm& b) {
  AlphaEnv env;
  return compare_terms(a, b, env);
}

bool alpha_eq(const OtTerm& a, const OtTerm& b) { return alpha_compare(a, b) == 0; }

void free_vars(const OtTerm& t, std::set<OtVar>& out) {
  std::vector<OtVar> bound;
  collect_free(t, bound, out);
}

std::set<OtVar> free_vars(const OtTerm& t) {
  std::set<OtVar> out;
  free_vars(t, out);
  return out;
}

bool occurs_free(const OtVar& v, const OtTerm& t) {
  switch (t.kind()) {
    case OtTerm::Kind::Var:
      return t.name() == v.name && t.type() == v.type;
    case OtTerm::Kind::Const:
      return false;
    case OtTerm::Kind::App:
      return occurs_free(v, t.fn()) || occurs_free(v, t.arg());
    case OtTerm::Kind::Abs:
      if (t.name() == v.name && t.bound().type == v.type) return false;
      return occurs_free(v, t.body());
  }
  return false;
}

void type_vars(const OtType& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) type_vars(a, out);
}

void type_vars(const OtTerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case OtTerm::Kind::Var:
    case OtTerm::Kind::Const:
      type_vars(t.type(), out);
      return;
    case OtTerm::Kind::App:
      type_vars(t.fn(), out);
      type_vars(t.arg(), out);
      return;
    case OtTerm::Kind::Abs:
      type_vars(t.bound().type, out);
      type_vars(t.body(), out);
      return;
  }
}

bool has_hyp(const std::vector<OtTerm>& hyps, const OtTerm& h) {
  return std::any_of(hyps.begin(), hyps.end(), [&](const OtTerm& x) { return alpha_eq(x, h); });
}

bool alpha_eq(const Sequent& a, const Sequent& b) {
  if (!alpha_eq(a.concl, b.concl)) return false;
  for (const auto& h : a.hyps) {
    if (!has_hyp(b.hyps, h)) return false;
  }
  for (const auto& h : b.hyps) {
    if (!has_hyp(a.hyps, h)) return false;
  }
  return true;
}

namespace {

void print_type(const OtType& t, bool paren, std::string& out) {
  if (t.is_var()) {
    out += t.name();
    return;
  }
  if (t.is_fun()) {
    if (paren) out += '(';
    print_type(t.dom(), true, out);
    out += " -> ";
    print_type(t.cod(), false, out);
    if (paren) out += ')';
    return;
  }
  if (t.args().empty()) {
    out += t.name();
    return;
  }
  if (paren) out += '(';
  out += t.name();
  for (const auto& a : t.args()) {
    out += ' ';
    print_type(a, true, out);
  }
  if (paren) out += ')';
}

void print_term(const OtTerm& t, bool paren, std::string& out) {
  switch (t.kind()) {
    case OtTerm::Kind::Var:
    case OtTerm::Kind::Const:
      out += t.name();
      return;
    case OtTerm::Kind::Abs:
      if (paren) out += '(';
      out += '\\';
      out += t.name();
      out += ". ";
      print_term(t.body(), false, out);
      if (paren) out += ')';
      return;
    case OtTerm::Kind::App:
      if (paren) out += '(';
      if (t.is_eq()) {
        print_term(t.lhs(), true, out);
        out += " = ";
        print_term(t.rhs(), true, out);
      } else {
        print_term(t.fn(), t.fn().is(OtTerm::Kind::Abs) || t.fn().is_eq(), out);
        out += ' ';
        print_term(t.arg(), true, out);
      }
      if (paren) out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const OtType& t) {
  std::string out;
  print_type(t, false, out);
  return out;
}

std::string to_string(const OtTerm& t) {
  std::string out;
  print_term(t, false, out);
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.hyps.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.hyps[i]);
  }
  out += out.empty() ? "|- " : " |- ";
  out += to_string(s.concl);
  return out;
}

}  // namespace sttx::ot
