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

#ifndef STTX_OT_EXPORT_HPP
#define STTX_OT_EXPORT_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sttx/core/rewrite.hpp"
#include "sttx/core/signature.hpp"
#include "sttx/kernel/proof.hpp"
#include "sttx/kernel/theory.hpp"
#include "sttx/ot/derivation.hpp"
#include "sttx/ot/term.hpp"

namespace sttx::ot::exporter {

inline constexpr const char* kTruth = "sttx.T";
inline constexpr const char* kAnd = "sttx.and";
inline constexpr const char* kImp = "sttx.imp";
inline constexpr const char* kAll = "sttx.all";

struct Options {
  // Introduce the connectives with defineConst instead of axioms.
  bool define_connectives = false;
  // Introduce defined constants with defineConst instead of an axiom c = t.
  bool native_definitions = false;
  std::string theory = "theory";
  std::size_t fuel = core::kDefaultFuel;
};

// The four connectives and their characteristic equations:
//   T = ((\x. x) = (\x. x))
//   and x y = ((\f. f x y) = (\f. f T T))
//   imp x y = (and x y = x)
//   all P = (P = \x. T)                    (all : (A -> bool) -> bool)
struct Prelude {
  Thm truth_def;
  Thm and_def;
  Thm imp_def;
  Thm all_def;
  // defineConst steps, in order, when the connectives are defined.
  std::vector<Thm> definitions;

  static OtTerm truth();
  static OtTerm conj();
  static OtTerm imp();
  static OtTerm all(const OtType& a);
};

// Scope for translating source terms: typed free term variables, and the
// names standing for the bound type levels of the enclosing polyterm.
struct Env {
  std::map<std::string, core::MonoType> vars;
  std::vector<std::string> binders;
};

// An article-level theorem for a source conclusion whose prenex binders are
// the free type variables `binders`, outermost first.
struct Export {
  std::string name;
  Thm thm;
};

// Serializes derivations as an article: version line, the defineConst steps
// in order, then each export as a `thm` preceded by a `# name` comment.
// Shared theorems and terms go through the dictionary; the stack is empty at
// the end. Deterministic.
std::string write_article(const std::vector<Thm>& definitions, const std::vector<Export>& exports);

struct PolyThm {
  Thm thm;
  std::vector<std::string> binders;
};

class Exporter {
 public:
  explicit Exporter(core::Signature sig, Options opts = {});

  const Options& options() const { return opts_; }
  const Prelude& prelude() const { return prelude_; }
  const core::Signature& signature() const { return sig_; }

  // ---- term translation ----
  std::string type_var_name(const std::string& source) const;
  OtType type(const core::MonoType& a, const std::vector<std::string>& binders = {}) const;
  OtTerm term(const core::Term& t, const Env& env) const;
  // Names for the prenex binders of a closed statement, distinct and clear of `avoid`.
  std::vector<std::string> binder_names(const core::PolyTerm& t, const std::set<std::string>& avoid = {}) const;

  // ---- derived rules ----
  Thm truth();
  Thm sym(const Thm& eq);
  Thm trans(const Thm& ab, const Thm& bc);
  Thm and_intro(const Thm& a, const Thm& b);
  Thm and_elim(const Thm& th, bool left);
  Thm imp_intro(const OtTerm& p, const Thm& th);
  Thm imp_elim(const Thm& imp, const Thm& arg);
  Thm forall_intro(const OtVar& v, const Thm& th);
  Thm forall_elim(const Thm& th, const OtTerm& witness);
  Thm conv(const Thm& th, const Thm& eq) { return Prim::eq_mp(eq, th); }
  // th mentions the type variable `binder`; renames it to a fresh Z%n when
  // needed, then substitutes `a`.
  Thm ty_forall_elim(const Thm& th, const std::string& binder, const OtType& a);
  // p = p', q = q' gives (p => q) = (p' => q').
  Thm imp_cong(const Thm& p, const Thm& q);
  // t = t' gives (!v. t) = (!v. t').
  Thm forall_cong(const OtVar& v, const Thm& th);
  Thm all_instance(const OtType& a, const OtTerm& pred);
  Thm and_instance(const OtTerm& p, const OtTerm& q);
  Thm imp_instance(const OtTerm& p, const OtTerm& q);
  // c = body instantiated at `tyargs` (already translated).
  Thm delta(const std::string& c, const std::vector<OtType>& tyargs);

  // ---- conversion ----
  using Leaf = std::function<Thm(const core::Term& sub, const Env& env)>;
  // Lifts leaf(sub) : sub' = u through the context of `whole` at `path`,
  // giving whole' = whole[path := u]. Binders on the path are opened with
  // fresh variables, visible to `leaf` through its Env.
  Thm congruence(const core::Term& whole, const core::Position& path, const Env& env, const Leaf& leaf);
  // As above with a fixed step equation whose left side must match the subterm.
  Thm congruence(const Thm& step, const core::Position& path, const core::Term& whole, const Env& env);
  // src = replay(src, trace).
  Thm conv_to_eq(const core::Term& src, const core::Trace& trace, const Env& env);
  // s = t for convertible s, t.
  Thm conv_eq(const core::Term& s, const core::Term& t, const Env& env);

  // ---- proofs ----
  PolyThm translate_proof(const kernel::ProofTerm& p, Env& env);
  // Translates a checked theorem; the result's binders are renamed to the
  // canonical names of its statement and its sequent is checked against the
  // translated statement.
  Thm translate_theorem(const kernel::Theorem& th);
  Sequent translate_statement(const kernel::Theorem& th) const;

  // ---- theories and articles ----
  void add_axiom(const std::string& name, const core::PolyTerm& statement);
  void add_theorem(const std::string& name, const kernel::Theorem& th);
  // Definitions, axioms and theorems of `th`, in order.
  void add_theory(const kernel::Theory& th);
  // Marks a theorem for export under `name`.
  void add_export(const std::string& name, const Thm& th);

  const std::vector<Export>& exports() const { return exports_; }
  const std::vector<Thm>& definitions() const { return definitions_; }
  std::string write_article() const;

 private:
  OtTerm translate(const core::Term& t, Env& env) const;
  std::string fresh_var(const std::string& hint, const Env& env) const;
  std::string fresh_type_var();
  const Thm& definition_of(const std::string& c);
  Thm eq_truth(const Thm& th);
  Thm lift(const core::Term& cur, const core::Position& path, std::size_t i, Env& env, const Leaf& leaf);

  core::Signature sig_;
  Options opts_;
  Prelude prelude_;
  Thm truth_;
  std::size_t fresh_counter_ = 0;

  struct Definition {
    Thm thm;
    std::vector<std::string> binders;
  };
  std::map<std::string, Definition> defs_;
  std::map<std::string, PolyThm> facts_;
  std::vector<Thm> definitions_;  // defineConst steps, article order
  std::vector<Export> exports_;
};

}  // namespace sttx::ot::exporter

#endif  // STTX_OT_EXPORT_HPP
