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

#ifndef STTX_ERROR_HPP
#define STTX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sttx {

// Every module reports failures through an exception carrying a module
// specific error-kind enum. `to_string(Kind)` must be visible for the kind.
template <class Kind>
class Error : public std::runtime_error {
 public:
  Error(Kind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace sttx

#endif  // STTX_ERROR_HPP
