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

#ifndef STTX_TOOLS_COMMANDS_HPP
#define STTX_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace sttx::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

struct Settings {
  std::size_t fuel;
  bool dump_trace = false;
};

// STTX_FUEL, or the library default when unset. Throws std::invalid_argument
// on a malformed value.
std::size_t fuel_from_env();

// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::string& path, const std::string& contents);

// Where the output for `input` goes: `out` itself for a single input, a file
// inside the directory `out` for several, next to the input when empty.
std::string output_path(const std::string& input, const std::string& out, std::size_t inputs, const char* ext);

int cmd_check(const std::vector<std::string>& paths, bool dump_ast, const Settings& s, std::ostream& out,
              std::ostream& err);
int cmd_export_ot(const std::vector<std::string>& paths, const std::string& out_path, bool define, bool selfcheck,
                  const Settings& s, std::ostream& out, std::ostream& err);
int cmd_export_coq(const std::vector<std::string>& paths, const std::string& out_path, const Settings& s,
                   std::ostream& out, std::ostream& err);
int cmd_verify_ot(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace sttx::cli

#endif  // STTX_TOOLS_COMMANDS_HPP
