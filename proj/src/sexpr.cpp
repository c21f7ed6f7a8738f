/* Copyright 2026 The Alethe Checker Authors. All Rights Reserved.

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
#include "alethe/sexpr.hpp"

#include <cctype>

namespace alethe {

namespace {

bool is_symbol_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  return std::string_view("~!@$%^&*_-+=<>.?/").find(c) !=
         std::string_view::npos;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    std::vector<SExpr> stack;
    for (;;) {
      skip_blank();
      if (at_end()) break;
      Location loc = here();
      char c = peek();
      if (c == '(') {
        advance();
        SExpr list;
        list.kind = SExpr::Kind::List;
        list.location = loc;
        stack.push_back(std::move(list));
        continue;
      }
      if (c == ')') {
        advance();
        if (stack.empty()) {
          throw Error(ErrorKind::ParseError, "unexpected ')'", loc);
        }
        SExpr done = std::move(stack.back());
        stack.pop_back();
        emit(std::move(done), stack, out);
        continue;
      }
      emit(read_atom(), stack, out);
    }
    if (!stack.empty()) {
      throw Error(ErrorKind::ParseError, "unclosed '('",
                  stack.back().location);
    }
    return out;
  }

 private:
  static void emit(SExpr e, std::vector<SExpr>& stack,
                   std::vector<SExpr>& out) {
    if (stack.empty()) {
      out.push_back(std::move(e));
    } else {
      stack.back().items.push_back(std::move(e));
    }
  }

  SExpr read_atom() {
    SExpr atom;
    atom.location = here();
    char c = peek();
    if (c == '|') {
      advance();
      std::string text;
      while (!at_end() && peek() != '|') {
        if (peek() == '\\') {
          throw Error(ErrorKind::LexError, "backslash in quoted symbol",
                      here());
        }
        text += advance();
      }
      if (at_end()) {
        throw Error(ErrorKind::LexError, "unterminated quoted symbol",
                    atom.location);
      }
      advance();
      atom.kind = SExpr::Kind::Symbol;
      atom.text = std::move(text);
      return atom;
    }
    if (c == '"') {
      advance();
      std::string text;
      for (;;) {
        if (at_end()) {
          throw Error(ErrorKind::LexError, "unterminated string literal",
                      atom.location);
        }
        char d = advance();
        if (d == '"') {
          if (!at_end() && peek() == '"') {
            text += advance();
            continue;
          }
          break;
        }
        text += d;
      }
      atom.kind = SExpr::Kind::String;
      atom.text = std::move(text);
      return atom;
    }
    if (c == ':') {
      std::string text(1, advance());
      while (!at_end() && is_symbol_char(peek())) text += advance();
      if (text.size() == 1) {
        throw Error(ErrorKind::LexError, "empty keyword", atom.location);
      }
      atom.kind = SExpr::Kind::Keyword;
      atom.text = std::move(text);
      return atom;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        text += advance();
      }
      atom.kind = SExpr::Kind::Numeral;
      if (!at_end() && peek() == '.') {
        text += advance();
        std::size_t digits = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          text += advance();
          ++digits;
        }
        if (digits == 0) {
          throw Error(ErrorKind::LexError, "malformed decimal '" + text + "'",
                      atom.location);
        }
        atom.kind = SExpr::Kind::Decimal;
      }
      if (!at_end() && is_symbol_char(peek())) {
        throw Error(ErrorKind::LexError, "malformed numeral", atom.location);
      }
      atom.text = std::move(text);
      return atom;
    }
    if (is_symbol_char(c)) {
      std::string text;
      while (!at_end() && is_symbol_char(peek())) text += advance();
      atom.kind = SExpr::Kind::Symbol;
      atom.text = std::move(text);
      return atom;
    }
    throw Error(ErrorKind::LexError,
                std::string("unexpected character '") + c + "'", atom.location);
  }

  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  Location here() const { return {line_, column_}; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) {
  return Reader(text).read_all();
}

std::string to_string(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::List: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += ' ';
        out += to_string(e.items[i]);
      }
      return out + ")";
    }
    case SExpr::Kind::String:
      return "\"" + e.text + "\"";
    default:
      return e.text;
  }
}

}  // namespace alethe
