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

#include "commands.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sttx/coq/render.hpp"
#include "sttx/core/rewrite.hpp"
#include "sttx/dk/ast.hpp"
#include "sttx/dk/decode.hpp"
#include "sttx/ot/check.hpp"
#include "sttx/ot/derivation.hpp"
#include "sttx/ot/export.hpp"

namespace sttx::cli {

namespace fs = std::filesystem;

namespace {

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": cannot read file\n";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump_traces(const std::string& name, const kernel::ProofTerm& p, const core::Signature& sig, std::size_t fuel,
                 std::ostream& out) {
  if (p.is(kernel::ProofTerm::Kind::Conv) && p.body().conclusion()) {
    const core::PolyTerm& from = *p.body().conclusion();
    out << name << ": conv " << core::to_string(from) << "\n";
    out << "  to " << core::to_string(p.target()) << "\n";
    if (auto traces = core::conv(from, p.target(), sig, fuel)) {
      auto show = [](const core::Trace& t) { return t.empty() ? std::string("(normal)") : core::to_string(t); };
      out << "  left:  " << show(traces->first) << "\n";
      out << "  right: " << show(traces->second) << "\n";
    }
  }
  for (std::size_t i = 0; i < p.num_children(); ++i) dump_traces(name, p.child(i), sig, fuel, out);
}

// Decodes one file, reporting each entry. Returns nullopt after printing
// errors when anything failed.
std::optional<kernel::Theory> load(const std::string& path, const Settings& s, bool verbose, std::ostream& out,
                                   std::ostream& err) {
  auto text = read_file(path, err);
  if (!text) return std::nullopt;
  std::vector<dk::EntryReport> report;
  kernel::Theory th;
  try {
    th = dk::load_theory(*text, &report, s.fuel);
  } catch (const dk::DkError& e) {
    err << path << ":" << e.what() << "\n";
    return std::nullopt;
  }
  std::size_t failed = 0;
  for (const auto& r : report) {
    if (r.ok) {
      if (verbose) out << path << ":" << r.line << ": " << r.name << " (" << r.kind << ") ok\n";
    } else {
      ++failed;
      err << path << ":" << r.line << ": " << r.name << " (" << r.kind << ") failed: " << r.error << "\n";
    }
  }
  if (verbose) out << path << ": " << report.size() << " entries, " << failed << " failed\n";
  if (failed) return std::nullopt;
  if (s.dump_trace) {
    for (const auto& f : th.facts()) {
      if (f.theorem) dump_traces(f.name, f.theorem->proof, th.signature(), s.fuel, out);
    }
  }
  return th;
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

// The article's exports must match what the exporter meant to write.
std::string selfcheck_article(const std::string& text, const ot::exporter::Exporter& ex) {
  ot::check::ArticleResult res;
  try {
    res = ot::check::run_article(text);
  } catch (const ot::check::CheckError& e) {
    return e.what();
  }
  const auto& want = ex.exports();
  if (res.exported.size() != want.size()) {
    return std::to_string(res.exported.size()) + " theorems exported, expected " + std::to_string(want.size());
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (res.exported[i].name != want[i].name) return "export " + res.exported[i].name + ", expected " + want[i].name;
    if (!ot::alpha_eq(res.exported[i].sequent, want[i].thm.sequent())) {
      return "export " + want[i].name + " has a different sequent";
    }
  }
  return {};
}

template <class F>
int each_output(const std::vector<std::string>& paths, const std::string& out_path, const char* ext,
                std::ostream& err, F produce) {
  if (paths.size() > 1 && !out_path.empty()) fs::create_directories(out_path);
  int rc = kOk;
  for (const auto& p : paths) {
    std::optional<std::string> text = produce(p);
    if (!text) {
      rc = kFailure;
      continue;
    }
    std::string dest = output_path(p, out_path, paths.size(), ext);
    try {
      write_atomic(dest, *text);
    } catch (const std::exception& e) {
      err << dest << ": " << e.what() << "\n";
      rc = kFailure;
    }
  }
  return rc;
}

}  // namespace

std::size_t fuel_from_env() {
  const char* v = std::getenv("STTX_FUEL");
  if (!v || !*v) return core::kDefaultFuel;
  std::size_t pos = 0;
  unsigned long long n = 0;
  try {
    n = std::stoull(v, &pos);
  } catch (const std::logic_error&) {
    pos = 0;
  }
  if (pos == 0 || pos != std::string(v).size() || n == 0) {
    throw std::invalid_argument(std::string("STTX_FUEL: expected a positive integer, got '") + v + "'");
  }
  return static_cast<std::size_t>(n);
}

void write_atomic(const std::string& path, const std::string& contents) {
  fs::path dest(path);
  fs::path tmp = dest;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw std::runtime_error("cannot write " + tmp.string());
    o << contents;
    o.flush();
    if (!o) {
      fs::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, dest);
}

std::string output_path(const std::string& input, const std::string& out, std::size_t inputs, const char* ext) {
  if (out.empty()) return fs::path(input).replace_extension(ext).string();
  if (inputs == 1) return out;
  return (fs::path(out) / fs::path(input).filename().replace_extension(ext)).string();
}

int cmd_check(const std::vector<std::string>& paths, bool dump_ast, const Settings& s, std::ostream& out,
              std::ostream& err) {
  int rc = kOk;
  for (const auto& p : paths) {
    if (dump_ast) {
      auto text = read_file(p, err);
      if (!text) {
        rc = kFailure;
        continue;
      }
      try {
        out << dk::print_entries(dk::parse_dk(*text));
      } catch (const dk::DkError& e) {
        err << p << ":" << e.what() << "\n";
        rc = kFailure;
        continue;
      }
    }
    if (!load(p, s, true, out, err)) rc = kFailure;
  }
  return rc;
}

int cmd_export_ot(const std::vector<std::string>& paths, const std::string& out_path, bool define, bool selfcheck,
                  const Settings& s, std::ostream& out, std::ostream& err) {
  return each_output(paths, out_path, ".art", err, [&](const std::string& p) -> std::optional<std::string> {
    auto th = load(p, s, false, out, err);
    if (!th) return std::nullopt;
    ot::exporter::Options opts;
    opts.define_connectives = define;
    opts.native_definitions = define;
    opts.theory = stem(p);
    opts.fuel = s.fuel;
    try {
      ot::exporter::Exporter ex(th->signature(), opts);
      ex.add_theory(*th);
      std::string text = ex.write_article();
      if (selfcheck) {
        std::string problem = selfcheck_article(text, ex);
        if (!problem.empty()) {
          err << p << ": self-check failed, nothing written: " << problem << "\n";
          return std::nullopt;
        }
      }
      out << p << ": " << ex.exports().size() << " theorems exported\n";
      return text;
    } catch (const ot::exporter::ExportError& e) {
      err << p << ": " << e.what() << "\n";
    } catch (const core::RewriteError& e) {
      err << p << ": " << e.what() << "\n";
    }
    return std::nullopt;
  });
}

int cmd_export_coq(const std::vector<std::string>& paths, const std::string& out_path, const Settings& s,
                   std::ostream& out, std::ostream& err) {
  return each_output(paths, out_path, ".v", err, [&](const std::string& p) -> std::optional<std::string> {
    auto th = load(p, s, false, out, err);
    if (!th) return std::nullopt;
    out << p << ": " << th->facts().size() << " facts rendered\n";
    return coq::render_theory(*th, stem(p));
  });
}

int cmd_verify_ot(const std::string& path, std::ostream& out, std::ostream& err) {
  auto text = read_file(path, err);
  if (!text) return kFailure;
  try {
    out << ot::check::report_json(ot::check::run_article(*text), nullptr) << "\n";
    return kOk;
  } catch (const ot::check::CheckError& e) {
    out << ot::check::report_json({}, &e) << "\n";
    err << path << ": " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace sttx::cli
