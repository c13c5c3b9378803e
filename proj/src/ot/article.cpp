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

#include <map>
#include <set>

#include "sttx/ot/export.hpp"

namespace sttx::ot::exporter {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void type_key(const OtType& t, std::string& out) {
  if (t.is_var()) {
    out += 'v';
    out += t.name();
    out += ';';
    return;
  }
  out += 'o';
  out += t.name();
  out += '(';
  for (const auto& a : t.args()) type_key(a, out);
  out += ')';
}

std::string type_key(const OtType& t) {
  std::string out;
  type_key(t, out);
  return out;
}

class Writer {
 public:
  std::string run(const std::vector<Thm>& definitions, const std::vector<Export>& exports) {
    for (const auto& d : definitions) {
      count_term(d.term());
      ++thm_uses_[d.id()];
    }
    for (const auto& e : exports) {
      count_thm(e.thm);
      for (const auto& h : e.thm.hyps()) count_term(h);
      count_term(e.thm.concl());
    }
    line("6");
    line("version");
    for (const auto& d : definitions) define(d);
    for (const auto& e : exports) {
      line("# " + e.name);
      thm(e.thm);
      list(e.thm.hyps());
      term(e.thm.concl());
      line("thm");
    }
    return std::move(out_);
  }

 private:
  std::string out_;
  long next_ = 0;

  std::map<const void*, long> thm_uses_;
  std::map<const void*, long> term_uses_;
  std::set<const void*> term_seen_;

  std::map<const void*, long> thm_key_;
  std::map<const void*, long> thm_left_;
  std::map<const void*, std::pair<OtTerm, long>> term_key_;
  std::map<std::string, long> type_key_;
  std::map<std::string, long> var_key_;
  std::map<std::string, long> const_key_;
  std::map<std::string, long> op_key_;
  std::set<std::string> defined_;

  void line(const std::string& s) {
    out_ += s;
    out_ += '\n';
  }

  long def() {
    long k = next_++;
    line(std::to_string(k));
    line("def");
    return k;
  }

  void ref(long k) {
    line(std::to_string(k));
    line("ref");
  }

  // ---- counting pass ----

  void count_term(const OtTerm& t) {
    if (++term_uses_[t.id()] > 1) return;
    switch (t.kind()) {
      case OtTerm::Kind::App:
        count_term(t.fn());
        count_term(t.arg());
        break;
      case OtTerm::Kind::Abs:
        count_term(t.body());
        break;
      default:
        break;
    }
  }

  void count_thm(const Thm& th) {
    if (++thm_uses_[th.id()] > 1) return;
    for (const auto& p : th.premises()) count_thm(p);
    switch (th.rule()) {
      case Thm::Rule::Assume:
      case Thm::Rule::Refl:
      case Thm::Rule::BetaConv:
        count_term(th.term());
        break;
      case Thm::Rule::Subst:
        for (const auto& [v, t] : th.term_inst()) count_term(t);
        break;
      case Thm::Rule::Axiom:
        for (const auto& h : th.hyps()) count_term(h);
        count_term(th.concl());
        break;
      default:
        break;
    }
  }

  // ---- emission ----

  template <class T, class F>
  void list(const std::vector<T>& xs, F f) {
    for (const auto& x : xs) f(x);
    line("nil");
    for (std::size_t i = 0; i < xs.size(); ++i) line("cons");
  }

  void list(const std::vector<OtTerm>& ts) {
    list(ts, [&](const OtTerm& t) { term(t); });
  }

  void type_op(const std::string& n) {
    auto it = op_key_.find(n);
    if (it != op_key_.end()) return ref(it->second);
    line(quote(n));
    line("typeOp");
    op_key_[n] = def();
  }

  void type(const OtType& t) {
    std::string key = type_key(t);
    auto it = type_key_.find(key);
    if (it != type_key_.end()) return ref(it->second);
    if (t.is_var()) {
      line(quote(t.name()));
      line("varType");
    } else {
      type_op(t.name());
      list(t.args(), [&](const OtType& a) { type(a); });
      line("opType");
    }
    type_key_[key] = def();
  }

  void var(const OtVar& v) {
    std::string key = v.name + '\0' + type_key(v.type);
    auto it = var_key_.find(key);
    if (it != var_key_.end()) return ref(it->second);
    line(quote(v.name));
    type(v.type);
    line("var");
    var_key_[key] = def();
  }

  void constant(const std::string& n) {
    auto it = const_key_.find(n);
    if (it != const_key_.end()) return ref(it->second);
    line(quote(n));
    line("const");
    const_key_[n] = def();
  }

  void term(const OtTerm& t) {
    auto it = term_key_.find(t.id());
    if (it != term_key_.end()) return ref(it->second.second);
    switch (t.kind()) {
      case OtTerm::Kind::Var:
        var({t.name(), t.type()});
        line("varTerm");
        break;
      case OtTerm::Kind::Const:
        constant(t.name());
        type(t.type());
        line("constTerm");
        break;
      case OtTerm::Kind::App:
        term(t.fn());
        term(t.arg());
        line("appTerm");
        break;
      case OtTerm::Kind::Abs:
        var(t.bound());
        term(t.body());
        line("absTerm");
        break;
    }
    auto u = term_uses_.find(t.id());
    if (u != term_uses_.end() && u->second > 1 && t.size() > 1) term_key_.emplace(t.id(), std::make_pair(t, def()));
  }

  void define(const Thm& d) {
    line(quote(d.name()));
    term(d.term());
    line("defineConst");
    long k = def();
    line("pop");
    thm_key_[d.id()] = k;
    thm_left_[d.id()] = thm_uses_[d.id()] - 1;
    const_key_[d.name()] = def();
    line("pop");
  }

  void thm(const Thm& th) {
    auto it = thm_key_.find(th.id());
    if (it != thm_key_.end()) {
      long& left = thm_left_[th.id()];
      line(std::to_string(it->second));
      if (--left <= 0) {
        line("remove");
        thm_key_.erase(it);
      } else {
        line("ref");
      }
      return;
    }
    const auto& ps = th.premises();
    switch (th.rule()) {
      case Thm::Rule::Assume:
        term(th.term());
        line("assume");
        break;
      case Thm::Rule::Refl:
        term(th.term());
        line("refl");
        break;
      case Thm::Rule::BetaConv:
        term(th.term());
        line("betaConv");
        break;
      case Thm::Rule::AppThm:
        thm(ps[0]);
        thm(ps[1]);
        line("appThm");
        break;
      case Thm::Rule::AbsThm:
        var(th.var());
        thm(ps[0]);
        line("absThm");
        break;
      case Thm::Rule::Subst:
        list(th.type_inst(), [&](const std::pair<std::string, OtType>& p) {
          line(quote(p.first));
          type(p.second);
          line("nil");
          line("cons");
          line("cons");
        });
        list(th.term_inst(), [&](const std::pair<OtVar, OtTerm>& p) {
          var(p.first);
          term(p.second);
          line("nil");
          line("cons");
          line("cons");
        });
        line("nil");
        line("cons");
        line("cons");
        thm(ps[0]);
        line("subst");
        break;
      case Thm::Rule::EqMp:
        thm(ps[0]);
        thm(ps[1]);
        line("eqMp");
        break;
      case Thm::Rule::DeductAntisym:
        thm(ps[0]);
        thm(ps[1]);
        line("deductAntisym");
        break;
      case Thm::Rule::ProveHyp:
        thm(ps[0]);
        thm(ps[1]);
        line("proveHyp");
        break;
      case Thm::Rule::Axiom:
        list(th.hyps());
        term(th.concl());
        line("axiom");
        break;
      case Thm::Rule::DefineConst:
        throw ExportError(ExportErrc::InternalDerivationError,
                          "definition of " + th.name() + " used before it was introduced");
    }
    long uses = thm_uses_[th.id()];
    if (uses > 1) {
      thm_key_[th.id()] = def();
      thm_left_[th.id()] = uses - 1;
    }
  }
};

}  // namespace

std::string write_article(const std::vector<Thm>& definitions, const std::vector<Export>& exports) {
  Writer w;
  return w.run(definitions, exports);
}

}  // namespace sttx::ot::exporter
