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

#ifndef STTX_OT_DERIVATION_HPP
#define STTX_OT_DERIVATION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sttx/error.hpp"
#include "sttx/ot/term.hpp"

namespace sttx::ot::exporter {

enum class ExportErrc {
  FreshnessViolation,
  InternalDerivationError,
  PathMismatch,
  TraceMismatch,
  FreshPoolExhausted,
};
std::string_view to_string(ExportErrc e);

class ExportError : public Error<ExportErrc> {
 public:
  ExportError(ExportErrc kind, const std::string& message, std::string phase = {})
      : Error<ExportErrc>(kind, (phase.empty() ? "" : "[" + phase + "] ") + message),
        message_(message),
        phase_(std::move(phase)) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& phase() const noexcept { return phase_; }

 private:
  std::string message_;
  std::string phase_;
};

using TypeInst = std::vector<std::pair<std::string, OtType>>;
using TermInst = std::vector<std::pair<OtVar, OtTerm>>;

// A derivation step together with the sequent it establishes. The sequent is
// computed (and the rule's side conditions checked) when the step is built,
// so every Thm is a valid derivation in the article calculus.
class Thm {
 public:
  enum class Rule : std::uint8_t {
    Assume,
    Refl,
    AppThm,
    AbsThm,
    BetaConv,
    Subst,
    EqMp,
    DeductAntisym,
    ProveHyp,
    Axiom,
    DefineConst,
  };

  Thm() = default;

  bool valid() const { return node_ != nullptr; }
  Rule rule() const;
  const Sequent& sequent() const;
  const std::vector<OtTerm>& hyps() const { return sequent().hyps; }
  const OtTerm& concl() const { return sequent().concl; }

  // Assume/Refl/BetaConv argument, DefineConst body.
  const OtTerm& term() const;
  const OtVar& var() const;  // AbsThm
  const TypeInst& type_inst() const;  // Subst
  const TermInst& term_inst() const;  // Subst
  const std::string& name() const;  // DefineConst constant
  const std::vector<Thm>& premises() const;
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Thm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend struct Prim;
};

// Primitive rules. Failures throw ExportError(InternalDerivationError).
struct Prim {
  static Thm assume(const OtTerm& p);
  static Thm refl(const OtTerm& t);
  static Thm app_thm(const Thm& fg, const Thm& xy);
  static Thm abs_thm(const OtVar& v, const Thm& th);
  static Thm beta_conv(const OtTerm& redex);
  // Types first, then terms; the term keys are read after type instantiation.
  static Thm subst(TypeInst tys, TermInst tms, const Thm& th);
  static Thm eq_mp(const Thm& eq, const Thm& th);
  static Thm deduct_antisym(const Thm& a, const Thm& b);
  static Thm prove_hyp(const Thm& hyp, const Thm& th);
  static Thm axiom(std::vector<OtTerm> hyps, const OtTerm& concl);
  static Thm define_const(const std::string& name, const OtTerm& body);
};

// Capture-avoiding substitution on terms, as used by the rules above.
OtTerm instantiate(const OtTerm& t, const std::map<std::string, OtType>& tys);
OtTerm substitute(const OtTerm& t, const std::map<OtVar, OtTerm>& tms);

}  // namespace sttx::ot::exporter

#endif  // STTX_OT_DERIVATION_HPP
