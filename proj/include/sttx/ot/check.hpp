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

#ifndef STTX_OT_CHECK_HPP
#define STTX_OT_CHECK_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sttx/error.hpp"
#include "sttx/ot/term.hpp"

namespace sttx::ot::check {

enum class CheckErrc { ParseError, StackUnderflow, TypeErrorInRule, UnknownCommand, DanglingDictionaryRef };
std::string_view to_string(CheckErrc e);

class CheckError : public Error<CheckErrc> {
 public:
  CheckError(CheckErrc kind, const std::string& message, std::size_t line = 0, std::string rule = {})
      : Error<CheckErrc>(kind, (line ? "line " + std::to_string(line) + ": " : std::string()) +
                                   (rule.empty() ? "" : rule + ": ") + message),
        line_(line),
        rule_(std::move(rule)),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& rule() const noexcept { return rule_; }
  // Without the kind, line and rule prefixes.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string rule_;
  std::string message_;
};

// Only the functions below create theorems.
class KernelTheorem {
 public:
  const Sequent& sequent() const { return seq_; }
  const std::vector<OtTerm>& hyps() const { return seq_.hyps; }
  const OtTerm& concl() const { return seq_.concl; }
  const std::string& provenance() const { return rule_; }

 private:
  KernelTheorem(Sequent s, std::string rule) : seq_(std::move(s)), rule_(std::move(rule)) {}
  Sequent seq_;
  std::string rule_;

  friend struct Rules;
};

using TypeSubst = std::map<std::string, OtType>;
using TermSubst = std::vector<std::pair<OtVar, OtTerm>>;

// The primitive inference rules. Failures throw CheckError(TypeErrorInRule).
struct Rules {
  static KernelTheorem assume(const OtTerm& p);
  static KernelTheorem refl(const OtTerm& t);
  static KernelTheorem app_thm(const KernelTheorem& fg, const KernelTheorem& xy);
  static KernelTheorem abs_thm(const OtVar& v, const KernelTheorem& th);
  static KernelTheorem beta_conv(const OtTerm& redex);
  // Types first, then terms; both simultaneous and capture-avoiding.
  static KernelTheorem subst(const TypeSubst& tys, const TermSubst& tms, const KernelTheorem& th);
  static KernelTheorem eq_mp(const KernelTheorem& eq, const KernelTheorem& th);
  static KernelTheorem deduct_antisym(const KernelTheorem& a, const KernelTheorem& b);
  // `hyp` proves a hypothesis of `th`.
  static KernelTheorem prove_hyp(const KernelTheorem& hyp, const KernelTheorem& th);
  static KernelTheorem axiom(std::vector<OtTerm> hyps, const OtTerm& concl);
  // |- c = t for a new constant c : type(t).
  static KernelTheorem define_const(const std::string& name, const OtTerm& t);
  // |- abs (rep a) = a and |- phi r = (rep (abs r) = r).
  static std::pair<KernelTheorem, KernelTheorem> define_type_op(const std::string& op, const std::string& abs,
                                                                const std::string& rep,
                                                                const std::vector<std::string>& tyvars,
                                                                const KernelTheorem& witness);
};

struct ExportedTheorem {
  std::string name;
  Sequent sequent;
};

struct ArticleResult {
  std::vector<ExportedTheorem> exported;
  std::vector<Sequent> assumed;
  std::vector<std::string> defined_constants;
  std::vector<std::string> defined_type_ops;
  std::size_t commands = 0;
  std::size_t leftover_stack = 0;
};

// Runs an article. A leading version line is optional. A `# name` comment
// line names the next exported theorem.
ArticleResult run_article(std::string_view text);

// Machine readable report; `error` is null on success.
std::string report_json(const ArticleResult& result, const CheckError* error);

}  // namespace sttx::ot::check

#endif  // STTX_OT_CHECK_HPP
