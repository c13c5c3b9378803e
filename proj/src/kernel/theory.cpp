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

#include "sttx/kernel/theory.hpp"

#include <set>

namespace sttx::kernel {

Theory::Theory(core::Signature sig) : sig_(std::move(sig)) {
  check_signature(sig_);
  for (std::size_t i = 0; i < sig_.size(); ++i) order_.push_back({false, i});
}

const Fact* Theory::find(const std::string& name) const {
  for (const auto& f : facts_) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

void Theory::check_fresh(const std::string& name) const {
  if (name.empty() || table_.count(name) || sig_.contains(name)) {
    throw KernelError(KernelErrc::IllFormedContext, "name '" + name + "' is empty or already used");
  }
}

void Theory::check_closed(const std::string& name, const core::PolyTerm& statement) const {
  if (!core::free_vars(statement.body).empty()) {
    throw KernelError(KernelErrc::UnboundVariable, name + " mentions free term variables");
  }
  std::set<std::string> tvs;
  core::free_type_vars(statement.body, tvs);
  if (!tvs.empty()) throw KernelError(KernelErrc::IllFormedType, name + " mentions free type variable " + *tvs.begin());
  check_proposition(sig_, {}, statement);
}

void Theory::extend(core::SigEntry e) {
  if (table_.count(core::entry_name(e))) {
    throw KernelError(KernelErrc::IllFormedContext, "name '" + core::entry_name(e) + "' is already used");
  }
  core::Signature next = sig_;
  next.add(std::move(e));
  check_signature(next);
  sig_ = std::move(next);
  order_.push_back({false, sig_.size() - 1});
}

void Theory::add_axiom(std::string name, core::PolyTerm statement) {
  check_fresh(name);
  check_closed(name, statement);
  table_.emplace(name, statement);
  facts_.push_back({std::move(name), std::move(statement), std::nullopt});
  order_.push_back({true, facts_.size() - 1});
}

const Theorem& Theory::add_theorem(std::string name, core::PolyTerm statement, const ProofTerm& proof,
                                   std::size_t fuel) {
  check_fresh(name);
  check_closed(name, statement);
  Theorem th = check_proof(sig_, {}, {}, proof, statement, &table_, fuel);
  table_.emplace(name, statement);
  facts_.push_back({std::move(name), std::move(statement), std::move(th)});
  order_.push_back({true, facts_.size() - 1});
  return *facts_.back().theorem;
}

}  // namespace sttx::kernel
