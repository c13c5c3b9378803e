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

#ifndef STTX_OT_TERM_HPP
#define STTX_OT_TERM_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sttx::ot {

// HOL types. `bool` and `->` are ordinary operators.
class OtType {
 public:
  enum class Kind : std::uint8_t { Var, Op };

  OtType() = default;

  static OtType var(std::string name);
  static OtType op(std::string name, std::vector<OtType> args = {});
  static OtType boolean();
  static OtType fun(OtType dom, OtType cod);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_fun() const;
  bool is_bool() const;

  const std::string& name() const;
  const std::vector<OtType>& args() const;
  const OtType& dom() const;
  const OtType& cod() const;

  friend bool operator==(const OtType& a, const OtType& b);
  friend bool operator<(const OtType& a, const OtType& b);

 private:
  struct Node;
  explicit OtType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct OtTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kEq = "=";
inline constexpr const char* kBool = "bool";
inline constexpr const char* kFun = "->";

// A variable is its name together with its type.
struct OtVar {
  std::string name;
  OtType type;

  friend bool operator==(const OtVar& a, const OtVar& b) { return a.name == b.name && a.type == b.type; }
  friend bool operator<(const OtVar& a, const OtVar& b) {
    return a.name != b.name ? a.name < b.name : a.type < b.type;
  }
};

// Named HOL terms. Every node caches its type; App checks it.
class OtTerm {
 public:
  enum class Kind : std::uint8_t { Var, Const, App, Abs };

  OtTerm() = default;

  static OtTerm var(std::string name, OtType type);
  static OtTerm var(const OtVar& v) { return var(v.name, v.type); }
  static OtTerm cnst(std::string name, OtType type);
  // Throws OtTypeError when `arg` does not fit the domain of `fn`.
  static OtTerm app(OtTerm fn, OtTerm arg);
  static OtTerm abs(OtVar v, OtTerm body);
  static OtTerm apps(OtTerm fn, std::initializer_list<OtTerm> args);

  static OtTerm eq_const(const OtType& a);
  static OtTerm eq(OtTerm lhs, OtTerm rhs);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  bool same_node(const OtTerm& o) const { return node_ == o.node_; }
  const void* id() const { return node_.get(); }

  // Var/Const name, Abs variable name.
  const std::string& name() const;
  const OtType& type() const;
  // Abs bound variable.
  OtVar bound() const;
  const OtTerm& body() const;
  const OtTerm& fn() const;
  const OtTerm& arg() const;

  bool is_eq() const;
  const OtTerm& lhs() const;  // of an equation
  const OtTerm& rhs() const;

  std::size_t size() const;

 private:
  struct Node;
  explicit OtTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Alpha-equivalence.
bool alpha_eq(const OtTerm& a, const OtTerm& b);
// Total order compatible with alpha-equivalence (0 iff alpha-equal).
int alpha_compare(const OtTerm& a, const OtTerm& b);

void free_vars(const OtTerm& t, std::set<OtVar>& out);
std::set<OtVar> free_vars(const OtTerm& t);
bool occurs_free(const OtVar& v, const OtTerm& t);
void type_vars(const OtType& t, std::set<std::string>& out);
void type_vars(const OtTerm& t, std::set<std::string>& out);

// Hypotheses are kept in insertion order without alpha-duplicates.
struct Sequent {
  std::vector<OtTerm> hyps;
  OtTerm concl;
};

bool has_hyp(const std::vector<OtTerm>& hyps, const OtTerm& h);
// Same hypothesis set and conclusion, up to alpha.
bool alpha_eq(const Sequent& a, const Sequent& b);

std::string to_string(const OtType& t);
std::string to_string(const OtTerm& t);
std::string to_string(const Sequent& s);

}  // namespace sttx::ot

#endif  // STTX_OT_TERM_HPP
