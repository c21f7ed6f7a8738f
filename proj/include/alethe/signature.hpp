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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "alethe/sort.hpp"
#include "alethe/term.hpp"

namespace alethe {

struct FunctionDecl {
  std::string name;
  std::vector<Sort> domain;
  Sort codomain;
};

// A define-fun (or a :named term, which is a nullary definition).
struct Definition {
  std::string name;
  std::vector<Term> params;
  Sort codomain;
  Term body;
};

// Declared sorts and function symbols, plus definitions. Builtin operators of
// Core and linear arithmetic are implicit.
class SignatureTable {
 public:
  void declare_sort(const std::string& name);
  bool has_sort(std::string_view name) const;

  void declare_function(FunctionDecl decl);
  // Also declares the function.
  void define_function(Definition def);

  const FunctionDecl* find_function(std::string_view name) const;
  const Definition* find_definition(std::string_view name) const;
  bool is_declared(std::string_view name) const;

  const std::vector<std::string>& definition_order() const {
    return definition_order_;
  }

 private:
  std::map<std::string, bool, std::less<>> sorts_;
  std::map<std::string, FunctionDecl, std::less<>> functions_;
  std::map<std::string, Definition, std::less<>> definitions_;
  std::vector<std::string> definition_order_;
};

bool is_builtin_symbol(std::string_view name);

// Builds a well-sorted application (or nullary constant) of `fn`, checking it
// against the builtin operators or the declared signature. Throws SortError or
// UndeclaredSymbol.
Term apply(TermManager& tm, const SignatureTable& sig, std::string_view fn,
           std::vector<Term> args);

// Replaces every defined symbol by its definiens, recursively.
class DefinitionExpander {
 public:
  DefinitionExpander(TermManager& tm, const SignatureTable& sig)
      : tm_(tm), sig_(sig) {}

  Term expand(Term t);
  Clause expand(const Clause& clause);

 private:
  TermManager& tm_;
  const SignatureTable& sig_;
  std::unordered_map<Term, Term> cache_;
};

}  // namespace alethe
