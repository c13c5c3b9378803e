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

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "support/fixtures.hpp"
#include "support/theory_gen.hpp"
#include "sttx/coq/render.hpp"
#include "sttx/dk/decode.hpp"

namespace sttx {
namespace {

using core::MonoType;
using core::PolyTerm;
using core::PolyType;
using core::Term;
using kernel::ProofTerm;
using namespace testing;

std::string read_file(const std::string& rel) {
  std::ifstream in(std::string(STTX_SOURCE_DIR) + "/" + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Collapses whitespace and drops it around ':'.
std::string norm(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space && c != ':' && out.back() != ':') out += ' ';
    space = false;
    out += c;
  }
  return out;
}

bool valid_ident(const std::string& s) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_']*");
  return std::regex_match(s, re) && s != "_" && !coq::is_keyword(s);
}

TEST(CoqType, Examples) {
  core::Signature sig;
  sig.add_type_op("nat", 0);
  EXPECT_EQ(coq::render_type(PolyType({"X"}, arr(bv(0), arr(bv(0), prop())))), "forall X:Type, X -> X -> Prop");
  EXPECT_EQ(coq::render_type(prop()), "Prop");
  EXPECT_EQ(coq::render_type(nat(), sig), "nat");
}

TEST(CoqType, OperatorsAndArrows) {
  core::Signature sig;
  sig.add_type_op("list", 1);
  sig.add_type_op("pair", 2);
  MonoType l = MonoType::op("list", {arr(bv(0), prop())});
  EXPECT_EQ(coq::render_type(PolyType({"A", "B"}, arr(arr(bv(0), bv(1)), MonoType::op("pair", {l, bv(1)}))), sig),
            "forall A B:Type, (A -> B) -> pair (list (A -> Prop)) B");
  coq::Renderer r(sig);
  EXPECT_EQ(r.type_parameter({"pair", 2}), "Parameter pair : Type -> Type -> Type.");
  EXPECT_EQ(r.type_parameter({"unit", 0}), "Parameter unit : Type.");
}

TEST(CoqGolden, LeibnizDefinition) {
  kernel::Theory th = dk::load_theory(read_file("corpus/leibniz.sdk"));
  coq::Renderer r(th.signature());
  EXPECT_EQ(norm(r.definition("leibniz")), norm(read_file("tests/golden/leibniz_def.v")));
}

TEST(CoqGolden, ExpAxioms) {
  kernel::Theory th = dk::load_theory(read_file("corpus/exp.sdk"));
  coq::Renderer r(th.signature());
  std::string got;
  for (const char* ax : {"sym_eq_exp_body_0", "sym_eq_exp_body_S"}) got += r.axiom(ax, th.find(ax)->statement) + "\n";
  EXPECT_EQ(norm(got), norm(read_file("tests/golden/exp_axioms.v")));
}

TEST(CoqGolden, ReflProof) {
  kernel::Theory th;
  th.extend(leibniz_sig().entries().front());
  MonoType x = tv("X");
  Term px = ap(fv("P"), fv("x"));
  th.add_theorem("refl", refl_statement(),
                 ProofTerm::ty_forall_intro(
                     "X", ProofTerm::forall_intro(
                              "x", x, ProofTerm::forall_intro("P", arr(x, prop()),
                                                              ProofTerm::imp_intro(px, ProofTerm::assume(px))))));
  coq::Renderer r(th.signature(), {"refl"});
  EXPECT_EQ(norm(r.theorem("refl", *th.find("refl")->theorem)), norm(read_file("tests/golden/refl_proof.v")));
}

TEST(CoqTerm, FermatShape) {
  core::Signature sig;
  sig.add_type_op("nat", 0);
  sig.declare("O", nat());
  sig.declare("S", arr(nat(), nat()));
  sig.declare("pred", arr(nat(), nat()));
  sig.declare("exp", arr(nat(), arr(nat(), nat())));
  sig.declare("prime", arr(nat(), prop()));
  sig.declare("divides", arr(nat(), arr(nat(), prop())));
  sig.declare("congruent", arr(nat(), arr(nat(), arr(nat(), prop()))));
  sig.declare("Not", arr(prop(), prop()));
  Term body = Term::imp(ap(cst("prime"), fv("p")),
                        Term::imp(ap(cst("Not"), ap(cst("divides"), fv("p"), fv("a"))),
                                  ap(ap(cst("congruent"), ap(cst("exp"), fv("a"), ap(cst("pred"), fv("p"))),
                                        ap(cst("S"), cst("O"))),
                                     fv("p"))));
  Term st = Term::all("p", nat(), Term::all("a", nat(), body));
  coq::Renderer r(sig);
  EXPECT_EQ(norm(r.statement(st)),
            norm("forall p a : nat,\n  prime p -> Not (divides p a) -> congruent (exp a (pred p)) (S O) p"));
}

TEST(CoqTerm, BindersAndPrecedence) {
  core::Signature sig = mini_nat_sig();
  coq::Renderer r(sig);
  Term t = Term::lam("f", arr(nat(), nat()), Term::lam("n", nat(), Term::lam("b", prop(), ap(fv("f"), fv("n")))));
  EXPECT_EQ(r.term(t), "fun (f:nat -> nat) (n:nat) (b:Prop) => f n");
  Term q = Term::all("p", prop(), Term::all("q", prop(), Term::imp(Term::imp(fv("p"), fv("q")), fv("p"))));
  EXPECT_EQ(r.statement(q), "forall p q:Prop, (p -> q) -> p");
  Term mixed = Term::all("n", nat(), Term::all("f", arr(nat(), nat()), ap(cst("le"), fv("n"), ap(fv("f"), fv("n")))));
  EXPECT_EQ(r.statement(mixed), "forall (n:nat) (f:nat -> nat), le n (f n)");
  Term nested = ap(cst("double"), ap(Term::lam("m", nat(), fv("m")), cst("O")));
  EXPECT_EQ(r.statement(nested), "double ((fun (m:nat) => m) O)");
  EXPECT_EQ(r.term(PolyTerm({"A"}, Term::lam("a", bv(0), ap(cst("id", {bv(0)}), fv("a"))))),
            "fun (A:Type) => fun (a:A) => id A a");
}

TEST(CoqProof, AssumeIsTheBoundHypothesis) {
  kernel::Theory th;
  Term q = fv("q");
  th.add_theorem("imp_refl", Term::all("q", prop(), Term::imp(q, q)),
                 ProofTerm::forall_intro("q", prop(), ProofTerm::imp_intro(q, ProofTerm::assume(q))));
  coq::Renderer r(th.signature(), {"imp_refl"});
  EXPECT_EQ(r.proof(th.find("imp_refl")->theorem->proof), "fun q:Prop => fun h:q => h");
  Term nested = Term::imp(q, Term::imp(q, q));
  th.add_theorem("k", Term::all("q", prop(), nested),
                 ProofTerm::forall_intro("q", prop(),
                                         ProofTerm::imp_intro(q, ProofTerm::imp_intro(q, ProofTerm::assume(q)))));
  EXPECT_EQ(r.proof(th.find("k")->theorem->proof), "fun q:Prop => fun h:q => fun h':q => h'");
}

TEST(CoqProof, EliminationsAreApplicationsAndConvVanishes) {
  kernel::Theory th = dk::load_theory(read_file("corpus/mini_nat.sdk"));
  std::vector<std::string> facts;
  for (const auto& f : th.facts()) facts.push_back(f.name);
  coq::Renderer r(th.signature(), facts);
  const kernel::Fact* id_idem = th.find("id_idem");
  ASSERT_NE(id_idem, nullptr);
  std::string p = r.proof(id_idem->theorem->proof);
  EXPECT_EQ(p, "fun X:Type => fun x:X => refl X x");
  const kernel::Fact* sym = th.find("sym_eq");
  ASSERT_NE(sym, nullptr);
  EXPECT_EQ(r.proof(sym->theorem->proof),
            "fun X:Type => fun x:X => fun y:X => fun h:(leibniz X x y) => h (fun (z:X) => leibniz X z x) (refl X x)");
}

TEST(CoqTheory, EmptyTheory) {
  std::string out = coq::render_theory(kernel::Theory{}, "empty");
  EXPECT_NE(out.find("Module Type empty_SIG.\nEnd empty_SIG.\n"), std::string::npos) << out;
  EXPECT_NE(out.find("Module empty_FUN (M : empty_SIG).\nEnd empty_FUN.\n"), std::string::npos) << out;
  EXPECT_EQ(out.find("Import"), std::string::npos);
  EXPECT_EQ(out.rfind("(* Generated by sttx ", 0), 0u);
}

TEST(CoqTheory, ExpFunctor) {
  kernel::Theory th = dk::load_theory(read_file("corpus/exp.sdk"));
  std::string out = coq::render_theory(th, "exp");
  std::size_t end_sig = out.find("End exp_SIG.");
  ASSERT_NE(end_sig, std::string::npos);
  for (const char* line : {"Parameter nat : Type.", "Parameter O : nat.", "Parameter S : nat -> nat.",
                           "Parameter exp : nat -> nat -> nat.", "Axiom sym_eq_exp_body_0 : ",
                           "Axiom sym_eq_exp_body_S : "}) {
    std::size_t at = out.find(line);
    EXPECT_LT(at, end_sig) << line << "\n" << out;
  }
  EXPECT_EQ(out.find("Parameter eq"), std::string::npos);
  EXPECT_NE(out.find("eq : Coq equality"), std::string::npos);
  EXPECT_NE(out.find("Module exp_FUN (M : exp_SIG).\nImport M.\n"), std::string::npos);
  std::size_t thm = out.find("Definition exp_one : forall n:nat, (S O) = (exp n O) :=\n  sym_eq_exp_body_0.");
  EXPECT_GT(thm, end_sig);
  EXPECT_NE(thm, std::string::npos) << out;
}

TEST(CoqTheory, DefinitionsNeededByAxiomsGoToTheModuleType) {
  kernel::Theory th = dk::load_theory(read_file("corpus/mini_nat.sdk"));
  std::string out = coq::render_theory(th, "mini_nat");
  std::size_t end_sig = out.find("End mini_nat_SIG.");
  std::size_t leib = out.find("Definition leibniz ");
  ASSERT_NE(end_sig, std::string::npos);
  ASSERT_NE(leib, std::string::npos);
  EXPECT_LT(leib, end_sig) << out;
  std::size_t refl = out.find("Definition refl ");
  EXPECT_GT(refl, end_sig);
  EXPECT_NE(refl, std::string::npos);
}

TEST(CoqTheory, LeibnizOnlyHasNoAxiomsSoEverythingIsInTheFunctor) {
  kernel::Theory th = dk::load_theory(read_file("corpus/leibniz.sdk"));
  std::string out = coq::render_theory(th, "leibniz");
  EXPECT_NE(out.find("Module Type leibniz_SIG.\nEnd leibniz_SIG."), std::string::npos) << out;
  EXPECT_NE(out.find("(* Identifier mapping: identity. *)"), std::string::npos);
  EXPECT_NE(out.find("forall (P:X -> Prop), P x -> P y."), std::string::npos);
}

TEST(CoqNames, SanitizeAndKeywords) {
  EXPECT_EQ(coq::sanitize("a.b"), "a_b");
  EXPECT_EQ(coq::sanitize("1x"), "c_1x");
  EXPECT_EQ(coq::sanitize("'x"), "c_'x");
  EXPECT_EQ(coq::sanitize("fun"), "fun_");
  EXPECT_EQ(coq::sanitize("_"), "__");
  EXPECT_EQ(coq::sanitize(""), "c_");
  EXPECT_EQ(coq::sanitize("plus_O"), "plus_O");
}

TEST(CoqNames, ManglingIsInjective) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "a_.1'x";
  for (int round = 0; round < 50; ++round) {
    coq::Names names;
    std::set<std::string> sources;
    std::set<std::string> idents;
    for (int i = 0; i < 200; ++i) {
      std::string s;
      int len = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int k = 0; k < len; ++k) s += alphabet[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
      if (!sources.insert(s).second) {
        EXPECT_EQ(names.add(s), names(s));
        continue;
      }
      const std::string& id = names.add(s);
      EXPECT_TRUE(valid_ident(id)) << s << " -> " << id;
      EXPECT_TRUE(idents.insert(id).second) << s << " collides at " << id;
    }
  }
}

TEST(CoqNames, GlobalsAndLocalsDoNotClash) {
  core::Signature sig;
  sig.add_type_op("nat", 0);
  sig.declare("a.b", nat());
  sig.declare("a_b", nat());
  sig.declare("x", nat());
  sig.declare("fun", arr(nat(), nat()));
  sig.define("k", arr(nat(), nat()), Term::lam("x", nat(), ap(cst("fun"), cst("x"))));
  coq::Renderer r(sig);
  EXPECT_EQ(r.names()("a.b"), "a_b");
  EXPECT_EQ(r.names()("a_b"), "a_b_1");
  EXPECT_EQ(r.names()("fun"), "fun_");
  EXPECT_EQ(norm(r.definition("k")), norm("Definition k : nat -> nat := fun (x':nat) => fun_ x."));
  kernel::Theory th;
  for (const auto& e : sig.entries()) th.extend(e);
  std::string out = coq::render_theory(th, "names");
  EXPECT_NE(out.find("a.b => a_b\n"), std::string::npos) << out;
  EXPECT_NE(out.find("a_b => a_b_1\n"), std::string::npos) << out;
  EXPECT_NE(out.find("Parameter a_b_1 : nat."), std::string::npos);
}

TEST(CoqTheory, Deterministic) {
  std::string a = coq::render_theory(dk::load_theory(read_file("corpus/mini_nat.sdk")), "m");
  std::string b = coq::render_theory(dk::load_theory(read_file("corpus/mini_nat.sdk")), "m");
  EXPECT_EQ(a, b);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::string x = coq::render_theory(random_theory(seed), "gen");
    std::string y = coq::render_theory(random_theory(seed), "gen");
    EXPECT_EQ(x, y) << seed;
    EXPECT_NE(x.find("End gen_FUN."), std::string::npos);
  }
}

}  // namespace
}  // namespace sttx
