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

#include <algorithm>
#include <cctype>

#include "sttx/dk/ast.hpp"

namespace sttx::dk {

namespace {

enum class Tok { Ident, LParen, RParen, Colon, Assign, Dot, Arrow, FatArrow, Lambda, End };

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident:
      return "identifier";
    case Tok::LParen:
      return "'('";
    case Tok::RParen:
      return "')'";
    case Tok::Colon:
      return "':'";
    case Tok::Assign:
      return "':='";
    case Tok::Dot:
      return "'.'";
    case Tok::Arrow:
      return "'->'";
    case Tok::FatArrow:
      return "'=>'";
    case Tok::Lambda:
      return "'\\'";
    case Tok::End:
      return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (in[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < in.size()) {
    char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == ';' && i + 1 < in.size() && in[i + 1] == ';') {
      while (i < in.size() && in[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::End, {}, line, col};
    auto two = in.substr(i, 2);
    if (two == "->") {
      t.kind = Tok::Arrow;
      advance(2);
    } else if (two == "=>") {
      t.kind = Tok::FatArrow;
      advance(2);
    } else if (two == ":=") {
      t.kind = Tok::Assign;
      advance(2);
    } else if (c == '(' || c == ')' || c == ':' || c == '.' || c == '\\') {
      t.kind = c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : c == ':' ? Tok::Colon : c == '.' ? Tok::Dot : Tok::Lambda;
      advance(1);
    } else if (ident_char(c) && c != '\'') {
      std::size_t j = i;
      while (j < in.size() && ident_char(in[j])) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(in.substr(i, j - i));
      advance(j - i);
    } else {
      throw DkError(DkErrc::SyntaxError, std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, {}, line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<DkEntry> file() {
    std::vector<DkEntry> out;
    while (peek().kind != Tok::End) out.push_back(entry());
    return out;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

  const Token& expect(Tok k) {
    const Token& t = peek();
    if (t.kind != k) {
      throw DkError(DkErrc::SyntaxError, std::string("expected ") + describe(k) + ", found " + describe(t.kind),
                    t.line, t.col);
    }
    ++pos_;
    return t;
  }

  DkEntry entry() {
    DkEntry e;
    const Token& name = expect(Tok::Ident);
    e.name = name.text;
    e.line = name.line;
    expect(Tok::Colon);
    e.type = term();
    if (peek().kind == Tok::Assign) {
      ++pos_;
      e.body = term();
    }
    expect(Tok::Dot);
    return e;
  }

  DkTerm term() {
    if (peek().kind == Tok::Lambda) {
      ++pos_;
      std::string x = expect(Tok::Ident).text;
      expect(Tok::Colon);
      DkTerm annot = term();
      expect(Tok::FatArrow);
      scope_.push_back(x);
      DkTerm body = term();
      scope_.pop_back();
      return DkTerm::lam(x, annot, body);
    }
    if (peek().kind == Tok::LParen && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon) {
      pos_ += 1;
      std::string x = expect(Tok::Ident).text;
      expect(Tok::Colon);
      DkTerm annot = term();
      expect(Tok::RParen);
      expect(Tok::Arrow);
      scope_.push_back(x);
      DkTerm body = term();
      scope_.pop_back();
      return DkTerm::pi(x, annot, body);
    }
    DkTerm lhs = app();
    if (peek().kind == Tok::Arrow) {
      ++pos_;
      return DkTerm::arrow(lhs, term());
    }
    return lhs;
  }

  DkTerm app() {
    DkTerm t = atom();
    while (peek().kind == Tok::Ident || peek().kind == Tok::LParen) t = DkTerm::app(t, atom());
    return t;
  }

  DkTerm atom() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      ++pos_;
      if (std::find(scope_.begin(), scope_.end(), t.text) != scope_.end()) return DkTerm::var(t.text);
      return DkTerm::sym(t.text);
    }
    if (t.kind == Tok::LParen) {
      ++pos_;
      DkTerm inner = term();
      expect(Tok::RParen);
      return inner;
    }
    throw DkError(DkErrc::SyntaxError, std::string("expected a term, found ") + describe(t.kind), t.line, t.col);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

std::vector<DkEntry> parse_dk(std::string_view input) { return Parser(lex(input)).file(); }

}  // namespace sttx::dk
