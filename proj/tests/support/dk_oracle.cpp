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

#include "support/dk_oracle.hpp"

namespace sttx::testing {

using dk::DkTerm;
using K = DkTerm::Kind;

namespace {

// Kind-level symbols; `Type` is the sort of type, ptype, term _, proof _.
constexpr const char* kEncoding = R"(
type : Type.
arr : type -> type -> type.
prop : type.
ptype : Type.
p : type -> ptype.
term : ptype -> Type.
impl : term (p (arr prop (arr prop prop))).
forallKtype : (type -> ptype) -> ptype.
proof : term (p prop) -> Type.
forall : (t : type) -> term (p (arr (arr t prop) prop)).
forallKprop : (type -> term (p prop)) -> term (p prop).
)";

bool is_sort(const DkTerm& t) { return t.is_sym("Type"); }

}  // namespace

DkTyper::DkTyper() {
  for (const auto& e : dk::parse_dk(kEncoding)) types_[e.name] = e.type;
}

std::string DkTyper::gensym() { return "%g" + std::to_string(counter_++); }

DkTerm DkTyper::subst(const DkTerm& t, const std::string& x, const DkTerm& u) {
  switch (t.kind()) {
    case K::Var:
      return t.name() == x ? u : t;
    case K::Sym:
      return t;
    case K::App:
      return DkTerm::app(subst(t.fn(), x, u), subst(t.arg(), x, u));
    case K::Lam:
    case K::Pi: {
      DkTerm annot = subst(t.annot(), x, u);
      if (t.name() == x) return t.is(K::Lam) ? DkTerm::lam(t.name(), annot, t.body()) : DkTerm::pi(t.name(), annot, t.body());
      std::string y = t.name();
      DkTerm body = t.body();
      if (!y.empty() && dk::occurs_free(u, y)) {
        std::string z = gensym();
        body = subst(body, y, DkTerm::var(z));
        y = z;
      }
      body = subst(body, x, u);
      return t.is(K::Lam) ? DkTerm::lam(y, annot, body) : DkTerm::pi(y, annot, body);
    }
  }
  return t;
}

// One of the five rules at the root of an already normal spine, or the
// input unchanged.
DkTerm DkTyper::rewrite_head(const DkTerm& t) {
  DkTerm h = t.head();
  std::vector<DkTerm> args = t.args();
  if (args.size() != 1 || !h.is(K::Sym)) return t;
  DkTerm a = args[0];
  DkTerm ah = a.head();
  std::vector<DkTerm> aa = a.args();
  if (!ah.is(K::Sym)) return t;
  auto app1 = [](const char* s, DkTerm x) { return DkTerm::app(DkTerm::sym(s), std::move(x)); };
  if (h.name() == "term") {
    if (ah.name() == "arr" && aa.size() == 2) return DkTerm::arrow(app1("term", aa[0]), app1("term", aa[1]));
    if (ah.name() == "forallKtype" && aa.size() == 1) {
      std::string x = gensym();
      return DkTerm::pi(x, DkTerm::sym("type"), app1("term", DkTerm::app(aa[0], DkTerm::var(x))));
    }
  }
  if (h.name() == "proof") {
    if (ah.name() == "impl" && aa.size() == 2) return DkTerm::arrow(app1("proof", aa[0]), app1("proof", aa[1]));
    if (ah.name() == "forall" && aa.size() == 2) {
      std::string x = gensym();
      return DkTerm::pi(x, app1("term", aa[0]), app1("proof", DkTerm::app(aa[1], DkTerm::var(x))));
    }
    if (ah.name() == "forallKprop" && aa.size() == 1) {
      std::string x = gensym();
      return DkTerm::pi(x, DkTerm::sym("type"), app1("proof", DkTerm::app(aa[0], DkTerm::var(x))));
    }
  }
  return t;
}

DkTerm DkTyper::normalize(const DkTerm& t) {
  switch (t.kind()) {
    case K::Var:
      return t;
    case K::Sym: {
      if (t.is_sym("ptype")) return DkTerm::sym("type");
      auto it = defs_.find(t.name());
      return it == defs_.end() ? t : normalize(it->second);
    }
    case K::Lam:
      return DkTerm::lam(t.name(), normalize(t.annot()), normalize(t.body()));
    case K::Pi:
      return DkTerm::pi(t.name(), normalize(t.annot()), normalize(t.body()));
    case K::App: {
      DkTerm f = normalize(t.fn());
      DkTerm a = normalize(t.arg());
      if (f.is(K::Lam)) return normalize(subst(f.body(), f.name(), a));
      if (f.is_sym("p")) return a;
      DkTerm r = DkTerm::app(f, a);
      DkTerm w = rewrite_head(r);
      if (w.is(K::Pi)) return normalize(w);
      return r;
    }
  }
  return t;
}

bool DkTyper::convertible(const DkTerm& a, const DkTerm& b) { return dk::alpha_eq(normalize(a), normalize(b)); }

DkTerm DkTyper::infer(const DkTerm& t) {
  std::vector<Ctx> ctx;
  return infer(t, ctx);
}

DkTerm DkTyper::infer(const DkTerm& t, std::vector<Ctx>& ctx) {
  switch (t.kind()) {
    case K::Var:
      for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
        if (it->name == t.name()) return it->type;
      }
      throw DkTypeError("unbound variable " + t.name());
    case K::Sym: {
      auto it = types_.find(t.name());
      if (it == types_.end()) throw DkTypeError("unknown symbol " + t.name());
      return it->second;
    }
    case K::App: {
      DkTerm ft = normalize(infer(t.fn(), ctx));
      if (!ft.is(K::Pi)) throw DkTypeError("applying " + dk::to_string(t.fn()) + " of type " + dk::to_string(ft));
      DkTerm at = infer(t.arg(), ctx);
      if (!convertible(at, ft.annot())) {
        throw DkTypeError("argument " + dk::to_string(t.arg()) + " : " + dk::to_string(at) + ", expected " +
                          dk::to_string(ft.annot()));
      }
      return ft.name().empty() ? ft.body() : subst(ft.body(), ft.name(), t.arg());
    }
    case K::Lam: {
      DkTerm s = infer(t.annot(), ctx);
      if (!is_sort(normalize(s))) throw DkTypeError("lambda annotation is not a type: " + dk::to_string(t.annot()));
      ctx.push_back({t.name(), t.annot()});
      DkTerm b = infer(t.body(), ctx);
      ctx.pop_back();
      return DkTerm::pi(t.name(), t.annot(), b);
    }
    case K::Pi: {
      if (!is_sort(normalize(infer(t.annot(), ctx)))) throw DkTypeError("product domain is not a type");
      ctx.push_back({t.name(), t.annot()});
      DkTerm b = infer(t.body(), ctx);
      ctx.pop_back();
      return b;
    }
  }
  throw DkTypeError("unreachable");
}

void DkTyper::add(const dk::DkEntry& e) {
  std::vector<Ctx> ctx;
  DkTerm s = normalize(infer(e.type, ctx));
  if (!is_sort(s)) {
    throw DkTypeError(e.name + ": type of sort " + dk::to_string(s));
  }
  if (e.body) {
    DkTerm bt = infer(*e.body, ctx);
    if (!convertible(bt, e.type)) {
      throw DkTypeError(e.name + ": body has type " + dk::to_string(normalize(bt)) + ", expected " +
                        dk::to_string(normalize(e.type)));
    }
    defs_[e.name] = *e.body;
  }
  types_[e.name] = e.type;
}

}  // namespace sttx::testing
