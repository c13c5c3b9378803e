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

#ifndef STTX_TESTS_SUPPORT_FIXTURES_HPP
#define STTX_TESTS_SUPPORT_FIXTURES_HPP

#include <string>

#include "sttx/core/signature.hpp"
#include "sttx/core/term.hpp"
#include "sttx/core/type.hpp"

namespace sttx::testing {

using core::MonoType;
using core::PolyTerm;
using core::PolyType;
using core::Term;

inline MonoType prop() { return MonoType::prop(); }
inline MonoType nat() { return MonoType::op("nat"); }
inline MonoType arr(MonoType a, MonoType b) { return MonoType::fun(std::move(a), std::move(b)); }
inline MonoType tv(const std::string& n) { return MonoType::var(n); }
inline MonoType bv(std::uint32_t l) { return MonoType::bound(l); }
inline Term fv(const std::string& n) { return Term::free(n); }
inline Term cst(const std::string& n, std::vector<MonoType> args = {}) { return Term::cnst(n, std::move(args)); }
inline Term ap(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }
inline Term ap(Term f, Term a, Term b) { return ap(ap(std::move(f), std::move(a)), std::move(b)); }

// leibniz : forall X. X -> X -> Prop := \X. \x y : X. !P : X -> Prop. P x => P y
inline Term leibniz_body(const MonoType& x) {
  Term p = fv("P");
  return Term::lam("x", x,
                   Term::lam("y", x,
                             Term::all("P", arr(x, prop()), Term::imp(ap(p, fv("x")), ap(p, fv("y"))))));
}

inline core::Signature leibniz_sig() {
  core::Signature sig;
  sig.define("leibniz", PolyType({"X"}, arr(bv(0), arr(bv(0), prop()))), PolyTerm({"X"}, leibniz_body(bv(0))));
  return sig;
}

// forall X. !x : X. leibniz X x x
inline PolyTerm refl_statement() {
  return PolyTerm({"X"}, Term::all("x", bv(0), ap(cst("leibniz", {bv(0)}), fv("x"), fv("x"))));
}

// A small arithmetic signature with declared and (polymorphic) defined constants.
inline core::Signature mini_nat_sig() {
  core::Signature sig = leibniz_sig();
  sig.add_type_op("nat", 0);
  sig.declare("O", nat());
  sig.declare("S", arr(nat(), nat()));
  sig.declare("plus", arr(nat(), arr(nat(), nat())));
  sig.declare("le", arr(nat(), arr(nat(), prop())));
  sig.define("id", PolyType({"A"}, arr(bv(0), bv(0))), PolyTerm({"A"}, Term::lam("a", bv(0), fv("a"))));
  sig.define("double", arr(nat(), nat()),
             Term::lam("n", nat(), ap(cst("plus"), fv("n"), fv("n"))));
  sig.define("twice", PolyType({"A"}, arr(arr(bv(0), bv(0)), arr(bv(0), bv(0)))),
             PolyTerm({"A"}, Term::lam("f", arr(bv(0), bv(0)),
                                       Term::lam("a", bv(0), ap(fv("f"), ap(fv("f"), fv("a")))))));
  sig.define("top", prop(), Term::all("p", prop(), Term::imp(fv("p"), fv("p"))));
  sig.define("const", PolyType({"A", "B"}, arr(bv(0), arr(bv(1), bv(0)))),
             PolyTerm({"A", "B"}, Term::lam("a", bv(0), Term::lam("b", bv(1), fv("a")))));
  return sig;
}

}  // namespace sttx::testing

#endif  // STTX_TESTS_SUPPORT_FIXTURES_HPP
