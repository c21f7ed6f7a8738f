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
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "alethe/error.hpp"

namespace alethe {

// Raw s-expression as read from SMT-LIB / Alethe text.
struct SExpr {
  enum class Kind { Symbol, Keyword, Numeral, Decimal, String, List };

  Kind kind = Kind::List;
  // Symbol text with |quotes| removed, keyword including the colon, literal
  // digits, or string contents.
  std::string text;
  std::vector<SExpr> items;
  Location location;

  bool is_symbol() const { return kind == Kind::Symbol; }
  bool is_symbol(std::string_view s) const {
    return kind == Kind::Symbol && text == s;
  }
  bool is_keyword(std::string_view s) const {
    return kind == Kind::Keyword && text == s;
  }
  bool is_list() const { return kind == Kind::List; }
};

// Reads every top-level s-expression. Throws LexError for malformed tokens
// and ParseError for unbalanced parentheses.
std::vector<SExpr> read_sexprs(std::string_view text);

std::string to_string(const SExpr& e);

}  // namespace alethe
