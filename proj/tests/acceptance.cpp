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

// Runs the eight acceptance criteria and prints one line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "support/admissibility.hpp"
#include "support/adversarial.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"
#include "support/roundtrip.hpp"
#include "support/theory_gen.hpp"
#include "sttx/coq/render.hpp"
#include "sttx/core/rewrite.hpp"
#include "sttx/dk/decode.hpp"
#include "sttx/dk/encode.hpp"
#include "sttx/ot/check.hpp"
#include "sttx/ot/export.hpp"

namespace {

using namespace sttx;
using namespace sttx::testing;
namespace fs = std::filesystem;

std::string read_file(const std::string& rel) {
  std::ifstream in(std::string(STTX_SOURCE_DIR) + "/" + rel);
  if (!in) throw std::runtime_error("cannot read " + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(std::string(STTX_SOURCE_DIR) + "/corpus")) {
    if (e.path().extension() == ".sdk") out.push_back("corpus/" + e.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Empty string: pass; otherwise the reason for failing.
using Check = std::function<std::string()>;

std::string refl_end_to_end() {
  kernel::Theory th = dk::load_theory(read_file("corpus/leibniz.sdk"));
  ot::exporter::Exporter ex(th.signature());
  ex.add_theory(th);
  auto r = ot::check::run_article(ex.write_article());
  const ot::OtType x = ot::OtType::var("X");
  const ot::OtVar v{"x", x};
  const ot::OtTerm leib =
      ot::OtTerm::cnst("leibniz", ot::OtType::fun(x, ot::OtType::fun(x, ot::OtType::boolean())));
  const ot::OtTerm want = ot::OtTerm::app(ot::exporter::Prelude::all(x),
                                          ot::OtTerm::abs(v, ot::OtTerm::apps(leib, {ot::OtTerm::var(v), ot::OtTerm::var(v)})));
  for (const auto& t : r.exported) {
    if (t.name != "theory.refl") continue;
    if (!t.sequent.hyps.empty()) return "refl has hypotheses";
    if (!ot::alpha_eq(t.sequent.concl, want)) return "refl concludes " + ot::to_string(t.sequent.concl);
    return {};
  }
  return "no theory.refl export";
}

std::string suites(const std::vector<SuiteResult>& rs, std::size_t expected, int n) {
  if (rs.size() != expected) return std::to_string(rs.size()) + " suites, expected " + std::to_string(expected);
  for (const auto& s : rs) {
    if (s.total != n || !s.ok()) {
      return s.name + ": " + std::to_string(s.passed) + "/" + std::to_string(s.total) + " " + s.first_failure;
    }
  }
  return {};
}

std::string admissibility() {
  std::string a = suites(rule_template_suites(2026, 100), 7, 100);
  if (!a.empty()) return a;
  return suites(congruence_suites(2026, 100), 8, 100);
}

std::string conversion_oracle() {
  SuiteResult r = conversion_oracle_suite(2026, 500, 25);
  if (r.total != 500 || !r.ok()) {
    return std::to_string(r.passed) + "/" + std::to_string(r.total) + " " + r.first_failure;
  }
  return {};
}

std::string confluence() {
  core::Signature sig = mini_nat_sig();
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 1000; ++seed) {
    TermGen gen(sig, seed);
    gen.add_free("n", nat());
    gen.add_free("q", prop());
    for (int i = 0; i < 50 && checked < 1000; ++i, ++checked) {
      core::Term t = gen.term(gen.random_type(2), 30);
      core::Term outer = core::normalize(t, sig).term;
      core::Term inner = innermost_normal_form(t, sig);
      if (!(outer == inner)) {
        return core::to_string(t) + ": " + core::to_string(outer) + " vs " + core::to_string(inner);
      }
    }
  }
  return {};
}

std::string round_trip() {
  for (const auto& f : corpus_files()) {
    std::string text = read_file(f);
    std::string e = file_round_trip(text);
    if (e.empty()) e = theory_round_trip(dk::load_theory(text));
    if (!e.empty()) return f + ": " + e;
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    kernel::Theory th = random_theory(seed);
    std::string e = theory_round_trip(th);
    if (e.empty()) e = file_round_trip(dk::print_entries(dk::encode(th)));
    if (!e.empty()) return "generated " + std::to_string(seed) + ": " + e;
  }
  return {};
}

std::string norm(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space && c != ':' && out.back() != ':') out += ' ';
    space = false;
    out += c;
  }
  return out;
}

std::string golden_coq() {
  kernel::Theory leib = dk::load_theory(read_file("corpus/leibniz.sdk"));
  if (norm(coq::Renderer(leib.signature()).definition("leibniz")) != norm(read_file("tests/golden/leibniz_def.v"))) {
    return "leibniz definition differs from tests/golden/leibniz_def.v";
  }
  kernel::Theory exp = dk::load_theory(read_file("corpus/exp.sdk"));
  coq::Renderer r(exp.signature());
  std::string got;
  for (const char* ax : {"sym_eq_exp_body_0", "sym_eq_exp_body_S"}) got += r.axiom(ax, exp.find(ax)->statement) + "\n";
  if (norm(got) != norm(read_file("tests/golden/exp_axioms.v"))) return "exp axioms differ from tests/golden/exp_axioms.v";
  return {};
}

std::string soundness_smoke() {
  auto outcomes = run_adversarial();
  if (outcomes.size() != 20) return std::to_string(outcomes.size()) + " items, expected 20";
  for (const auto& o : outcomes) {
    if (o.accepted) return o.name + " was accepted";
    if (!o.kind_ok) return o.name + " rejected with " + o.error;
  }
  return {};
}

std::string prelude_satisfiability() {
  auto r = ot::check::run_article(read_file("tests/data/prelude_defined.art"));
  if (!r.assumed.empty()) return "article assumes axioms";
  ot::exporter::Exporter ex{core::Signature{}};
  const auto& p = ex.prelude();
  const ot::exporter::Thm* want[] = {&p.truth_def, &p.and_def, &p.imp_def, &p.all_def};
  if (r.exported.size() != 4) return std::to_string(r.exported.size()) + " theorems exported, expected 4";
  for (std::size_t i = 0; i < 4; ++i) {
    if (!ot::alpha_eq(r.exported[i].sequent, want[i]->sequent())) {
      return r.exported[i].name + " is " + ot::to_string(r.exported[i].sequent);
    }
  }
  return {};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  Check run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "refl end-to-end", 1, refl_end_to_end},
      {2, "rule admissibility (7 templates, 8 contexts, 100 each)", 30, admissibility},
      {3, "conversion-proof oracle (500 terms, size <= 25)", 60, conversion_oracle},
      {4, "confluence: outermost vs innermost (1000 terms)", 30, confluence},
      {5, "round-trip (corpus + 200 generated theories)", 30, round_trip},
      {6, "golden Coq text", 1, golden_coq},
      {7, "soundness smoke (20 adversarial proofs)", 1, soundness_smoke},
      {8, "prelude satisfiability", 1, prelude_satisfiability},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && secs >= c.limit_s) why = "took longer than the " + std::to_string(c.limit_s) + " s limit";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f s", secs);
    std::cout << (why.empty() ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "  (" << buf << ")";
    if (!why.empty()) std::cout << ": " << why;
    std::cout << "\n";
    if (!why.empty()) ++failed;
  }
  std::cout << (8 - failed) << "/8 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
