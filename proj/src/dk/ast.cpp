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

#include "sttx/dk/ast.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace sttx::dk {

std::string_view to_string(DkErrc e) {
  switch (e) {
    case DkErrc::SyntaxError:
      return "SyntaxError";
    case DkErrc::NotATypeEncoding:
      return "NotATypeEncoding";
    case DkErrc::NonPrenex:
      return "NonPrenex";
    case DkErrc::NotATermEncoding:
      return "NotATermEncoding";
    case DkErrc::TypeMismatch:
      return "TypeMismatch";
    case DkErrc::NotAProofEncoding:
      return "NotAProofEncoding";
    case DkErrc::DecodeUnsound:
      return "DecodeUnsound";
  }
  return "DkErrc?";
}

bool is_builtin(std::string_view name) {
  static constexpr std::array<std::string_view, 11> kAll = {
      sym::kType, sym::kArr,   sym::kProp,  sym::kPtype,  sym::kP,          sym::kTerm,
      sym::kImpl, sym::kForallKtype, sym::kProof, sym::kForall, sym::kForallKprop};
  return std::find(kAll.begin(), kAll.end(), name) != kAll.end();
}

struct DkTerm::Node {
  Kind kind;
  std::string name;
  DkTerm a;
  DkTerm b;
};

DkTerm DkTerm::var(std::string name) {
  return DkTerm(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, {}}));
}

DkTerm DkTerm::sym(std::string name) {
  return DkTerm(std::make_shared<const Node>(Node{Kind::Sym, std::move(name), {}, {}}));
}

DkTerm DkTerm::app(DkTerm fn, DkTerm arg) {
  return DkTerm(std::make_shared<const Node>(Node{Kind::App, {}, std::move(fn), std::move(arg)}));
}

DkTerm DkTerm::apps(DkTerm fn, std::vector<DkTerm> args) {
  for (auto& a : args) fn = app(std::move(fn), std::move(a));
  return fn;
}

DkTerm DkTerm::lam(std::string var, DkTerm annot, DkTerm body) {
  return DkTerm(std::make_shared<const Node>(Node{Kind::Lam, std::move(var), std::move(annot), std::move(body)}));
}

DkTerm DkTerm::pi(std::string var, DkTerm annot, DkTerm body) {
  return DkTerm(std::make_shared<const Node>(Node{Kind::Pi, std::move(var), std::move(annot), std::move(body)}));
}

DkTerm::Kind DkTerm::kind() const { return node_->kind; }
const std::string& DkTerm::name() const { return node_->name; }
const DkTerm& DkTerm::fn() const { return node_->a; }
const DkTerm& DkTerm::arg() const { return node_->b; }
const DkTerm& DkTerm::annot() const { return node_->a; }
const DkTerm& DkTerm::body() const { return node_->b; }

DkTerm DkTerm::head() const {
  DkTerm t = *this;
  while (t.is(Kind::App)) {
    DkTerm f = t.fn();
    t = f;
  }
  return t;
}

std::vector<DkTerm> DkTerm::args() const {
  std::vector<DkTerm> out;
  DkTerm t = *this;
  while (t.is(Kind::App)) {
    out.push_back(t.arg());
    DkTerm f = t.fn();
    t = f;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

bool alpha(const DkTerm& a, const DkTerm& b, std::map<std::string, int>& la, std::map<std::string, int>& lb,
           int depth) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case DkTerm::Kind::Sym:
      return a.name() == b.name();
    case DkTerm::Kind::Var: {
      auto ia = la.find(a.name());
      auto ib = lb.find(b.name());
      if (ia == la.end() || ib == lb.end()) return ia == la.end() && ib == lb.end() && a.name() == b.name();
      return ia->second == ib->second;
    }
    case DkTerm::Kind::App:
      return alpha(a.fn(), b.fn(), la, lb, depth) && alpha(a.arg(), b.arg(), la, lb, depth);
    case DkTerm::Kind::Lam:
    case DkTerm::Kind::Pi: {
      if (!alpha(a.annot(), b.annot(), la, lb, depth)) return false;
      auto save = [](std::map<std::string, int>& m, const std::string& k) {
        auto it = m.find(k);
        return it == m.end() ? std::optional<int>() : std::optional<int>(it->second);
      };
      auto restore = [](std::map<std::string, int>& m, const std::string& k, std::optional<int> v) {
        if (v) {
          m[k] = *v;
        } else {
          m.erase(k);
        }
      };
      auto sa = save(la, a.name());
      auto sb = save(lb, b.name());
      la[a.name()] = depth;
      lb[b.name()] = depth;
      bool r = alpha(a.body(), b.body(), la, lb, depth + 1);
      restore(la, a.name(), sa);
      restore(lb, b.name(), sb);
      return r;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const DkTerm& a, const DkTerm& b) {
  std::map<std::string, int> la, lb;
  return alpha(a, b, la, lb, 0);
}

bool occurs_free(const DkTerm& t, const std::string& name) {
  switch (t.kind()) {
    case DkTerm::Kind::Var:
      return t.name() == name;
    case DkTerm::Kind::Sym:
      return false;
    case DkTerm::Kind::App:
      return occurs_free(t.fn(), name) || occurs_free(t.arg(), name);
    case DkTerm::Kind::Lam:
    case DkTerm::Kind::Pi:
      return occurs_free(t.annot(), name) || (t.name() != name && occurs_free(t.body(), name));
  }
  return false;
}

namespace {

void print(const DkTerm& t, int prec, std::string& out) {
  switch (t.kind()) {
    case DkTerm::Kind::Var:
    case DkTerm::Kind::Sym:
      out += t.name();
      return;
    case DkTerm::Kind::Lam:
      if (prec > 0) out += '(';
      out += '\\' + t.name() + " : ";
      print(t.annot(), 0, out);
      out += " => ";
      print(t.body(), 0, out);
      if (prec > 0) out += ')';
      return;
    case DkTerm::Kind::Pi:
      if (prec > 0) out += '(';
      if (!t.name().empty() && occurs_free(t.body(), t.name())) {
        out += '(' + t.name() + " : ";
        print(t.annot(), 0, out);
        out += ')';
      } else {
        print(t.annot(), 1, out);
      }
      out += " -> ";
      print(t.body(), 0, out);
      if (prec > 0) out += ')';
      return;
    case DkTerm::Kind::App:
      if (prec > 1) out += '(';
      print(t.fn(), 1, out);
      out += ' ';
      print(t.arg(), 2, out);
      if (prec > 1) out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const DkTerm& t) {
  std::string out;
  print(t, 0, out);
  return out;
}

std::string to_string(const DkEntry& e) {
  std::string out = e.name + " : " + to_string(e.type);
  if (e.body) out += "\n  := " + to_string(*e.body);
  return out + ".";
}

std::string print_entries(const std::vector<DkEntry>& entries) {
  std::string out;
  for (const auto& e : entries) out += to_string(e) + "\n";
  return out;
}

}  // namespace sttx::dk
