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

#ifndef STTX_TESTS_SUPPORT_DK_ORACLE_HPP
#define STTX_TESTS_SUPPORT_DK_ORACLE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sttx/dk/ast.hpp"

namespace sttx::testing {

// A small lambda-Pi type synthesizer for the encoding signature: the five
// rewrite rules, beta, unfolding of defined symbols, and `p` read as an
// identity coercion (so ptype and type coincide). Independent of the decoder.
class DkTyper {
 public:
  DkTyper();

  // Adds a theory entry; its type (and body) are checked first.
  void add(const dk::DkEntry& e);

  dk::DkTerm infer(const dk::DkTerm& t);
  dk::DkTerm normalize(const dk::DkTerm& t);
  bool convertible(const dk::DkTerm& a, const dk::DkTerm& b);

 private:
  struct Ctx {
    std::string name;
    dk::DkTerm type;
  };

  dk::DkTerm infer(const dk::DkTerm& t, std::vector<Ctx>& ctx);
  dk::DkTerm subst(const dk::DkTerm& t, const std::string& x, const dk::DkTerm& u);
  dk::DkTerm rewrite_head(const dk::DkTerm& t);
  std::string gensym();

  std::map<std::string, dk::DkTerm> types_;
  std::map<std::string, dk::DkTerm> defs_;
  std::size_t counter_ = 0;
};

struct DkTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sttx::testing

#endif  // STTX_TESTS_SUPPORT_DK_ORACLE_HPP
