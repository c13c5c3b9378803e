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

#ifndef STTX_TESTS_SUPPORT_ORACLE_HPP
#define STTX_TESTS_SUPPORT_ORACLE_HPP

#include "sttx/core/signature.hpp"
#include "sttx/core/term.hpp"

namespace sttx::testing {

// Innermost-first beta-delta normalizer over a named term representation with
// its own substitution. Shares nothing with core::normalize beyond reading
// the input term and building the result.
core::Term innermost_normal_form(const core::Term& t, const core::Signature& sig);

}  // namespace sttx::testing

#endif  // STTX_TESTS_SUPPORT_ORACLE_HPP
