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
#include "alethe/signature.hpp"

#include <algorithm>
#include <array>

#include "alethe/error.hpp"

namespace alethe {

namespace {

constexpr std::array<std::string_view, 25> kBuiltins = {
    "true", "false", "not", "and", "or", "xor", "=>", "=", "distinct",
    "ite", "+", "-", "*", "/", "div", "mod", "abs", "<", "<=", ">", ">=",
    "to_real", "to_int", "is_int", "!"};

[[noreturn]] void sort_error(std::string_view fn, const std::string& what) {
  throw Error(ErrorKind::SortError, "'" + std::string(fn) + "': " + what);
}

void require_arity(std::string_view fn, std::span<const Term> args,
                   std::size_t min, std::size_t max) {
  if (args.size() < min || args.size() > max) {
    sort_error(fn, "wrong number of arguments (" + std::to_string(args.size()) +
                       ")");
  }
}

void require_all(std::string_view fn, std::span<const Term> args,
                 bool (*pred)(const Sort&), const char* what) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!pred(args[i].sort())) {
      sort_error(fn, "argument " + std::to_string(i + 1) + " is not " + what);
    }
  }
}

bool is_bool_sort(const Sort& s) { return s.is_bool(); }
bool is_numeric_sort(const Sort& s) { return s.is_numeric(); }
bool is_int_sort(const Sort& s) { return s.kind() == SortKind::Int; }

Sort numeric_join(std::span<const Term> args) {
  for (Term a : args) {
    if (a.sort().kind() == SortKind::Real) return Sort::real();
  }
  return Sort::integer();
}

bool compatible(const Sort& a, const Sort& b) {
  return a == b || (a.is_numeric() && b.is_numeric());
}

constexpr std::size_t kMany = static_cast<std::size_t>(-1);

Sort builtin_sort(std::string_view fn, std::span<const Term> args) {
  if (fn == "not") {
    require_arity(fn, args, 1, 1);
    require_all(fn, args, is_bool_sort, "Bool");
    return Sort::boolean();
  }
  if (fn == "and" || fn == "or") {
    require_arity(fn, args, 1, kMany);
    require_all(fn, args, is_bool_sort, "Bool");
    return Sort::boolean();
  }
  if (fn == "xor" || fn == "=>") {
    require_arity(fn, args, 2, kMany);
    require_all(fn, args, is_bool_sort, "Bool");
    return Sort::boolean();
  }
  if (fn == "=" || fn == "distinct") {
    require_arity(fn, args, 2, kMany);
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (!compatible(args[0].sort(), args[i].sort())) {
        sort_error(fn, "arguments of sorts " + args[0].sort().to_string() +
                           " and " + args[i].sort().to_string());
      }
    }
    return Sort::boolean();
  }
  if (fn == "ite") {
    require_arity(fn, args, 3, 3);
    if (!args[0].sort().is_bool()) sort_error(fn, "condition is not Bool");
    if (!compatible(args[1].sort(), args[2].sort())) {
      sort_error(fn, "branches of different sorts");
    }
    if (args[1].sort().is_numeric()) return numeric_join(args.subspan(1));
    return args[1].sort();
  }
  if (fn == "+" || fn == "-" || fn == "*") {
    require_arity(fn, args, 1, kMany);
    require_all(fn, args, is_numeric_sort, "numeric");
    return numeric_join(args);
  }
  if (fn == "/") {
    require_arity(fn, args, 2, kMany);
    require_all(fn, args, is_numeric_sort, "numeric");
    return Sort::real();
  }
  if (fn == "div" || fn == "mod") {
    require_arity(fn, args, 2, 2);
    require_all(fn, args, is_int_sort, "Int");
    return Sort::integer();
  }
  if (fn == "abs") {
    require_arity(fn, args, 1, 1);
    require_all(fn, args, is_int_sort, "Int");
    return Sort::integer();
  }
  if (fn == "<" || fn == "<=" || fn == ">" || fn == ">=") {
    require_arity(fn, args, 2, kMany);
    require_all(fn, args, is_numeric_sort, "numeric");
    return Sort::boolean();
  }
  if (fn == "to_real") {
    require_arity(fn, args, 1, 1);
    require_all(fn, args, is_numeric_sort, "numeric");
    return Sort::real();
  }
  if (fn == "to_int") {
    require_arity(fn, args, 1, 1);
    require_all(fn, args, is_numeric_sort, "numeric");
    return Sort::integer();
  }
  if (fn == "is_int") {
    require_arity(fn, args, 1, 1);
    require_all(fn, args, is_numeric_sort, "numeric");
    return Sort::boolean();
  }
  sort_error(fn, "not a term operator");
}

}  // namespace

bool is_builtin_symbol(std::string_view name) {
  return std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end();
}

void SignatureTable::declare_sort(const std::string& name) {
  if (name == "Bool" || name == "Int" || name == "Real" || has_sort(name)) {
    throw Error(ErrorKind::SortError, "sort '" + name + "' already declared");
  }
  sorts_.emplace(name, true);
}

bool SignatureTable::has_sort(std::string_view name) const {
  return sorts_.find(name) != sorts_.end();
}

void SignatureTable::declare_function(FunctionDecl decl) {
  if (is_builtin_symbol(decl.name) || is_declared(decl.name)) {
    throw Error(ErrorKind::SortError,
                "symbol '" + decl.name + "' already declared");
  }
  if (decl.codomain.kind() == SortKind::Function) {
    throw Error(ErrorKind::SortError,
                "symbol '" + decl.name + "' has a function-sorted codomain");
  }
  std::string name = decl.name;
  functions_.emplace(std::move(name), std::move(decl));
}

void SignatureTable::define_function(Definition def) {
  FunctionDecl decl{def.name, {}, def.codomain};
  for (Term p : def.params) decl.domain.push_back(p.sort());
  declare_function(std::move(decl));
  definition_order_.push_back(def.name);
  std::string name = def.name;
  definitions_.emplace(std::move(name), std::move(def));
}

const FunctionDecl* SignatureTable::find_function(std::string_view name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

const Definition* SignatureTable::find_definition(std::string_view name) const {
  auto it = definitions_.find(name);
  return it == definitions_.end() ? nullptr : &it->second;
}

bool SignatureTable::is_declared(std::string_view name) const {
  return functions_.find(name) != functions_.end();
}

Term apply(TermManager& tm, const SignatureTable& sig, std::string_view fn,
           std::vector<Term> args) {
  if (fn == "true" || fn == "false") {
    if (!args.empty()) sort_error(fn, "constant applied to arguments");
    return tm.mk_bool(fn == "true");
  }
  if (is_builtin_symbol(fn)) {
    Sort result = builtin_sort(fn, args);
    return tm.mk_application(std::string(fn), std::move(args), result);
  }
  const FunctionDecl* decl = sig.find_function(fn);
  if (!decl) {
    throw Error(ErrorKind::UndeclaredSymbol,
                "undeclared symbol '" + std::string(fn) + "'");
  }
  if (decl->domain.size() != args.size()) {
    sort_error(fn, "expects " + std::to_string(decl->domain.size()) +
                       " arguments, got " + std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!(decl->domain[i] == args[i].sort())) {
      sort_error(fn, "argument " + std::to_string(i + 1) + " has sort " +
                         args[i].sort().to_string() + ", expected " +
                         decl->domain[i].to_string());
    }
  }
  return tm.mk_application(std::string(fn), std::move(args), decl->codomain);
}

Term DefinitionExpander::expand(Term t) {
  if (auto it = cache_.find(t); it != cache_.end()) return it->second;
  Term result = t;
  switch (t.kind()) {
    case TermKind::Variable:
      break;
    case TermKind::Constant:
      if (!t.is_numeral()) {
        if (const Definition* def = sig_.find_definition(t.name());
            def && def->params.empty()) {
          result = expand(def->body);
        }
      }
      break;
    case TermKind::Application: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (Term a : t.args()) args.push_back(expand(a));
      const Definition* def = sig_.find_definition(t.name());
      if (def && def->params.size() == args.size()) {
        Substitution sigma;
        for (std::size_t i = 0; i < args.size(); ++i) {
          sigma.emplace(def->params[i], args[i]);
        }
        result = substitute(tm_, expand(def->body), sigma);
      } else {
        result = tm_.mk_application(t.name(), std::move(args), t.sort());
      }
      break;
    }
    case TermKind::Binder: {
      Term body = expand(t.body());
      std::vector<Term> bound(t.bound().begin(), t.bound().end());
      result = tm_.mk_binder(t.binder(), std::move(bound), body);
      break;
    }
  }
  cache_.emplace(t, result);
  return result;
}

Clause DefinitionExpander::expand(const Clause& clause) {
  Clause out;
  out.reserve(clause.size());
  for (Term t : clause) out.push_back(expand(t));
  return out;
}

}  // namespace alethe
