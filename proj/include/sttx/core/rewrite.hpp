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

#ifndef STTX_CORE_REWRITE_HPP
#define STTX_CORE_REWRITE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sttx/core/signature.hpp"
#include "sttx/core/term.hpp"
#include "sttx/error.hpp"

namespace sttx::core {

enum class RewriteErrc { NotARedex, UnknownConstant, UndefinedConstant, FuelExhausted };
std::string_view to_string(RewriteErrc e);
using RewriteError = Error<RewriteErrc>;

struct RewriteStep {
  enum class Kind : std::uint8_t { Beta, Delta };

  Position position;
  Kind kind = Kind::Beta;
  std::string constant;  // Delta only

  static RewriteStep beta(Position p) { return {std::move(p), Kind::Beta, {}}; }
  static RewriteStep delta(Position p, std::string c) { return {std::move(p), Kind::Delta, std::move(c)}; }

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct Trace {
  std::vector<RewriteStep> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
  friend bool operator==(const Trace&, const Trace&) = default;
};

std::string to_string(const RewriteStep& s);
std::string to_string(const Trace& t);

inline constexpr std::size_t kDefaultFuel = 100000;

// The contractum of the redex `t` itself (position ignored).
Term contract(const Term& t, RewriteStep::Kind kind, const std::string& constant, const Signature& sig);
Term apply_step(const Term& t, const RewriteStep& s, const Signature& sig);
Term replay(const Term& t, const Trace& trace, const Signature& sig);

// Leftmost-outermost redex, if any.
std::optional<RewriteStep> find_redex(const Term& t, const Signature& sig);

struct Normalized {
  Term term;
  Trace trace;
};

Normalized normalize(const Term& t, const Signature& sig, std::size_t fuel = kDefaultFuel);
// Type binders are not reduction sites; only the body is normalized.
PolyTerm normal_form(const PolyTerm& t, const Signature& sig, std::size_t fuel = kDefaultFuel);

std::optional<std::pair<Trace, Trace>> conv(const Term& t, const Term& u, const Signature& sig,
                                            std::size_t fuel = kDefaultFuel);
std::optional<std::pair<Trace, Trace>> conv(const PolyTerm& t, const PolyTerm& u, const Signature& sig,
                                            std::size_t fuel = kDefaultFuel);

}  // namespace sttx::core

#endif  // STTX_CORE_REWRITE_HPP
