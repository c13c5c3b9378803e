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

#ifndef STTX_KERNEL_THEORY_HPP
#define STTX_KERNEL_THEORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "sttx/core/signature.hpp"
#include "sttx/kernel/proof.hpp"

namespace sttx::kernel {

// A closed statement: either assumed, or proved from the earlier facts.
struct Fact {
  std::string name;
  core::PolyTerm statement;
  std::optional<Theorem> theorem;  // absent for axioms

  bool is_axiom() const { return !theorem.has_value(); }
};

// A checked signature together with its axioms and theorems, in order.
class Theory {
 public:
  Theory() = default;
  // Validates the signature.
  explicit Theory(core::Signature sig);

  const core::Signature& signature() const { return sig_; }
  const std::vector<Fact>& facts() const { return facts_; }
  const FactTable& statements() const { return table_; }
  const Fact* find(const std::string& name) const;

  // Interleaving of signature entries and facts, in insertion order.
  struct Item {
    bool is_fact;
    std::size_t index;
  };
  const std::vector<Item>& order() const { return order_; }

  // Appends to the signature; the entry is checked against the current one.
  void extend(core::SigEntry e);
  // Statements must be closed propositions.
  void add_axiom(std::string name, core::PolyTerm statement);
  const Theorem& add_theorem(std::string name, core::PolyTerm statement, const ProofTerm& proof,
                             std::size_t fuel = core::kDefaultFuel);

 private:
  void check_fresh(const std::string& name) const;
  void check_closed(const std::string& name, const core::PolyTerm& statement) const;

  core::Signature sig_;
  std::vector<Fact> facts_;
  FactTable table_;
  std::vector<Item> order_;
};

}  // namespace sttx::kernel

#endif  // STTX_KERNEL_THEORY_HPP
