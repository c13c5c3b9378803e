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

#ifndef STTX_TESTS_SUPPORT_ROUNDTRIP_HPP
#define STTX_TESTS_SUPPORT_ROUNDTRIP_HPP

#include <string>

#include "sttx/kernel/theory.hpp"

namespace sttx::testing {

// encode . decode on a file: same entries up to alpha. Empty on success.
std::string file_round_trip(const std::string& text);

// decode . encode on a theory: compare_theories of the reloaded printout.
std::string theory_round_trip(const kernel::Theory& th);

}  // namespace sttx::testing

#endif  // STTX_TESTS_SUPPORT_ROUNDTRIP_HPP
