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

#ifndef STTX_DK_AST_HPP
#define STTX_DK_AST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sttx/error.hpp"

namespace sttx::dk {

enum class DkErrc {
  SyntaxError,
  NotATypeEncoding,
  NonPrenex,
  NotATermEncoding,
  TypeMismatch,
  NotAProofEncoding,
  DecodeUnsound,
};

std::string_view to_string(DkErrc e);

class DkError : public Error<DkErrc> {
 public:
  DkError(DkErrc kind, const std::string& message, int line = 0, int column = 0)
      : Error<DkErrc>(kind, (line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " : std::string()) +
                                message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Symbols of the encoding signature.
namespace sym {
inline constexpr std::string_view kType = "type";
inline constexpr std::string_view kArr = "arr";
inline constexpr std::string_view kProp = "prop";
inline constexpr std::string_view kPtype = "ptype";
inline constexpr std::string_view kP = "p";
inline constexpr std::string_view kTerm = "term";
inline constexpr std::string_view kImpl = "impl";
inline constexpr std::string_view kForallKtype = "forallKtype";
inline constexpr std::string_view kProof = "proof";
inline constexpr std::string_view kForall = "forall";
inline constexpr std::string_view kForallKprop = "forallKprop";
}  // namespace sym

bool is_builtin(std::string_view name);

// Lambda-Pi terms. Var is a bound variable (by name), Sym a global symbol:
// either a builtin of the encoding or a theory constant.
class DkTerm {
 public:
  enum class Kind : std::uint8_t { Var, Sym, App, Lam, Pi };

  DkTerm() = default;

  static DkTerm var(std::string name);
  static DkTerm sym(std::string name);
  static DkTerm app(DkTerm fn, DkTerm arg);
  static DkTerm apps(DkTerm fn, std::vector<DkTerm> args);
  static DkTerm lam(std::string var, DkTerm annot, DkTerm body);
  // Non-dependent products use an empty variable name.
  static DkTerm pi(std::string var, DkTerm annot, DkTerm body);
  static DkTerm arrow(DkTerm dom, DkTerm cod) { return pi({}, std::move(dom), std::move(cod)); }

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  bool is_sym(std::string_view name) const { return is(Kind::Sym) && this->name() == name; }

  const std::string& name() const;  // Var / Sym name, Lam / Pi variable
  const DkTerm& fn() const;
  const DkTerm& arg() const;
  const DkTerm& annot() const;
  const DkTerm& body() const;

  // Splits nested applications into head and arguments.
  DkTerm head() const;
  std::vector<DkTerm> args() const;

 private:
  struct Node;
  explicit DkTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Equality up to renaming of Lam/Pi binders.
bool alpha_eq(const DkTerm& a, const DkTerm& b);
// True when `name` occurs as a free Var in `t`.
bool occurs_free(const DkTerm& t, const std::string& name);

struct DkEntry {
  std::string name;
  DkTerm type;
  std::optional<DkTerm> body;
  int line = 0;
};

std::vector<DkEntry> parse_dk(std::string_view input);

std::string to_string(const DkTerm& t);
std::string to_string(const DkEntry& e);
std::string print_entries(const std::vector<DkEntry>& entries);

}  // namespace sttx::dk

#endif  // STTX_DK_AST_HPP
