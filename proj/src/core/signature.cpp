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

#include "sttx/core/signature.hpp"

namespace sttx::core {

const std::string& entry_name(const SigEntry& e) {
  if (const auto* op = std::get_if<TyOpDecl>(&e)) return op->op.name;
  if (const auto* d = std::get_if<CstDecl>(&e)) return d->name;
  return std::get<CstDefn>(e).name;
}

void Signature::add(SigEntry e) {
  index_.emplace(entry_name(e), entries_.size());
  entries_.push_back(std::move(e));
}

Signature Signature::prefix(std::size_t n) const {
  Signature out;
  for (std::size_t i = 0; i < n && i < entries_.size(); ++i) out.add(entries_[i]);
  return out;
}

std::optional<TypeOpRef> Signature::type_op(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  if (const auto* op = std::get_if<TyOpDecl>(&entries_[it->second])) return op->op;
  return std::nullopt;
}

const PolyType* Signature::constant_type(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return nullptr;
  const auto& e = entries_[it->second];
  if (const auto* d = std::get_if<CstDecl>(&e)) return &d->type;
  if (const auto* d = std::get_if<CstDefn>(&e)) return &d->type;
  return nullptr;
}

const CstDefn* Signature::definition(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return nullptr;
  return std::get_if<CstDefn>(&entries_[it->second]);
}

bool TypingContext::has_type_var(const std::string& name) const {
  for (const auto& e : entries_) {
    if (!e.type && e.name == name) return true;
  }
  return false;
}

const MonoType* TypingContext::term_type(const std::string& name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->type && it->name == name) return &*it->type;
  }
  return nullptr;
}

bool TypingContext::binds(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return true;
  }
  return false;
}

}  // namespace sttx::core
