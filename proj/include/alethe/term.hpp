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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alethe/sort.hpp"

namespace alethe {

enum class TermKind { Variable, Constant, Application, Binder };
enum class BinderKind { Forall, Exists, Choice };

std::string_view to_string(BinderKind kind);

namespace detail {
struct TermNode;
}

// Handle to an interned, immutable term. Two handles compare equal iff the
// terms are structurally identical.
class Term {
 public:
  Term() = default;

  bool is_null() const { return node_ == nullptr; }
  std::uint64_t id() const;
  TermKind kind() const;
  const Sort& sort() const;

  // Variable name, constant symbol or applied function symbol.
  const std::string& name() const;

  bool is_numeral() const;
  // Only valid for numerals.
  const mpq_class& value() const;

  std::span<const Term> args() const;

  BinderKind binder() const;
  std::span<const Term> bound() const;
  Term body() const;

  // Sorted by id.
  std::span<const Term> free_variables() const;

  bool is_variable() const { return kind() == TermKind::Variable; }
  bool is_application() const { return kind() == TermKind::Application; }
  bool is_binder() const { return kind() == TermKind::Binder; }
  bool is_app(std::string_view fn) const;
  bool is_not() const { return is_app("not"); }
  bool is_eq() const { return is_app("=") && args().size() == 2; }

  friend bool operator==(Term a, Term b) { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(Term a, Term b);

 private:
  friend class TermManager;
  explicit Term(const detail::TermNode* node) : node_(node) {}

  const detail::TermNode* node_ = nullptr;
};

namespace detail {
struct TermNode {
  std::uint64_t id = 0;
  TermKind kind = TermKind::Constant;
  BinderKind binder = BinderKind::Forall;
  Sort sort;
  std::string name;
  std::optional<mpq_class> value;
  // Application arguments, or bound variables followed by the body.
  std::vector<Term> children;
  std::vector<Term> free_vars;
};
}  // namespace detail

// Owns and interns every term of a problem and its proofs. Construction is
// internally synchronized, so checkers may build terms concurrently.
class TermManager {
 public:
  TermManager();
  ~TermManager();
  TermManager(const TermManager&) = delete;
  TermManager& operator=(const TermManager&) = delete;

  Term mk_variable(std::string name, Sort sort);
  Term mk_constant(std::string symbol, Sort sort);
  // Int numerals must be integral.
  Term mk_numeral(mpq_class value, Sort sort);
  Term mk_bool(bool value);
  // No signature check: the caller supplies the result sort.
  Term mk_application(std::string fn, std::vector<Term> args, Sort sort);
  // Throws SortError unless forall/exists bodies are Bool and choice binds
  // exactly one variable.
  Term mk_binder(BinderKind kind, std::vector<Term> bound, Term body);

  Term mk_not(Term t);
  Term mk_eq(Term lhs, Term rhs);

  // A name not used by any term so far, formed by appending a numeric suffix
  // to `base`. Freshness is global to this manager.
  std::string fresh_name(std::string_view base);
  void reserve_name(std::string_view name);

  std::size_t size() const;

 private:
  struct Impl;
  Term intern(detail::TermNode node);

  std::unique_ptr<Impl> impl_;
};

using Clause = std::vector<Term>;
using Substitution = std::map<Term, Term>;

// Simultaneous, capture-avoiding substitution of variables. Throws SortError
// when a variable is mapped to a term of another sort.
Term substitute(TermManager& tm, Term t, const Substitution& sigma);

bool alpha_equal(Term t, Term u);

std::vector<Term> free_variables(Term t);

// Occurrences of a binder over a variable named `name` anywhere inside t.
bool binds_name(Term t, std::string_view name);

// SMT-LIB concrete syntax.
std::string to_string(Term t);
std::string to_string(const Clause& clause);
std::string quote_symbol(std::string_view symbol);
std::string format_rational(const mpq_class& value, bool as_real);

}  // namespace alethe

template <>
struct std::hash<alethe::Term> {
  std::size_t operator()(alethe::Term t) const noexcept {
    return std::hash<std::uint64_t>{}(t.id());
  }
};
