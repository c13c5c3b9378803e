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

#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "commands.hpp"
#include "sttx/version.hpp"

int main(int argc, char** argv) {
  using namespace sttx::cli;
  CLI::App app{"sttx: STT-forall-beta-delta proof kernel and translators", "sttx"};
  app.set_version_flag("--version", std::string(sttx::kVersion));
  app.require_subcommand(1);

  Settings settings{};
  std::vector<std::string> paths;
  std::string article;
  std::string out_path;
  bool define = false;
  bool no_selfcheck = false;

  auto inputs = [&](CLI::App* sub) {
    sub->add_option("paths", paths, "Dedukti .sdk files")->required()->check(CLI::ExistingFile);
    sub->add_flag("--dump-trace", settings.dump_trace, "Print the normalization traces behind each conversion");
  };

  CLI::App* check = app.add_subcommand("check", "Parse, decode and kernel-check theories");
  inputs(check);
  CLI::App* import = app.add_subcommand("import-dk", "Like check, and print the parsed entries");
  inputs(import);

  CLI::App* export_ot = app.add_subcommand("export-ot", "Write an OpenTheory article per theory");
  inputs(export_ot);
  export_ot->add_option("--out,-o", out_path, "Output file, or directory for several inputs");
  auto* axiomatize = export_ot->add_flag("--axiomatize", "Assume the connectives and definitions (default)");
  export_ot->add_flag("--define", define, "Introduce connectives and definitions with defineConst")
      ->excludes(axiomatize);
  export_ot->add_flag("--no-selfcheck", no_selfcheck, "Skip re-verifying the article before writing");

  CLI::App* export_coq = app.add_subcommand("export-coq", "Write a Coq functor per theory");
  inputs(export_coq);
  export_coq->add_option("--out,-o", out_path, "Output file, or directory for several inputs");

  CLI::App* verify = app.add_subcommand("verify-ot", "Check an OpenTheory article and print a JSON report");
  verify->add_option("article", article, "Article file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
    settings.fuel = fuel_from_env();
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*check) return cmd_check(paths, false, settings, std::cout, std::cerr);
    if (*import) return cmd_check(paths, true, settings, std::cout, std::cerr);
    if (*export_ot) return cmd_export_ot(paths, out_path, define, !no_selfcheck, settings, std::cout, std::cerr);
    if (*export_coq) return cmd_export_coq(paths, out_path, settings, std::cout, std::cerr);
    if (*verify) return cmd_verify_ot(article, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "sttx: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
