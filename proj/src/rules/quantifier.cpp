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
#include <algorithm>

#include "alethe/error.hpp"
#include "alethe/rules.hpp"

namespace alethe {

namespace {

bool unit_equality(const Clause& c, Term& lhs, Term& rhs) {
  if (c.size() != 1 || !c[0].is_eq()) return false;
  lhs = c[0].args()[0];
  rhs = c[0].args()[1];
  return true;
}

bool is_free_in(Term var, Term t) {
  auto fv = t.free_variables();
  return std::binary_search(fv.begin(), fv.end(), var);
}

}  // namespace

Outcome check_bind(std::span<const Clause> subproof, const Anchor& anchor,
                   const Clause& conclusion) {
  Term lhs, rhs;
  if (!unit_equality(conclusion, lhs, rhs)) {
    return Outcome::fail("conclusion is not a unit equality");
  }
  if (!lhs.is_binder() || !rhs.is_binder() || lhs.binder() != rhs.binder() ||
      lhs.binder() == BinderKind::Choice) {
    return Outcome::fail("quantifier mismatch");
  }
  if (lhs.bound().size() != rhs.bound().size()) {
    return Outcome::fail("quantifier mismatch: different number of variables");
  }
  for (std::size_t i = 0; i < lhs.bound().size(); ++i) {
    Term x = lhs.bound()[i];
    Term y = rhs.bound()[i];
    if (x == y) continue;
    bool renamed = std::any_of(
        anchor.assignments.begin(), anchor.assignments.end(),
        [&](const ContextAssignment& a) {
          return a.variable == x && a.value && *a.value == y;
        });
    if (!renamed) {
      return Outcome::fail("variable " + x.name() +
                           " is not renamed to " + y.name() + " by the anchor");
    }
  }
  for (Term y : rhs.bound()) {
    if (is_free_in(y, lhs)) {
      return Outcome::fail("capture: " + y.name() + " free in original");
    }
  }
  if (subproof.empty()) return Outcome::fail("subproof conclusion mismatch");
  Term phi, psi;
  if (!unit_equality(subproof.back(), phi, psi) || !(phi == lhs.body()) ||
      !(psi == rhs.body())) {
    return Outcome::fail("subproof conclusion mismatch");
  }
  return Outcome::ok();
}

Outcome check_sko_ex(TermManager& tm, const Clause& conclusion,
                     const Context&) {
  Term lhs, rhs;
  if (!unit_equality(conclusion, lhs, rhs)) {
    return Outcome::fail("conclusion is not a unit equality");
  }
  if (!lhs.is_binder() || lhs.binder() != BinderKind::Exists) {
    return Outcome::fail("not a skolemization instance");
  }
  // One variable at a time, outermost first.
  Term x = lhs.bound().front();
  Term rest = lhs.body();
  if (lhs.bound().size() > 1) {
    std::vector<Term> tail(lhs.bound().begin() + 1, lhs.bound().end());
    rest = tm.mk_binder(BinderKind::Exists, std::move(tail), lhs.body());
  }
  Term witness = tm.mk_binder(BinderKind::Choice, {x}, rest);
  Term expected = substitute(tm, rest, {{x, witness}});
  if (alpha_equal(expected, rhs)) return Outcome::ok();
  return Outcome::fail("not a skolemization instance");
}

Outcome check_forall_inst(TermManager& tm, const Clause& conclusion,
                          std::span<const RuleArg> args) {
  if (conclusion.size() != 1 || !conclusion[0].is_app("or") ||
      conclusion[0].args().size() != 2) {
    return Outcome::fail("conclusion is not (or (not (forall ...)) ...)");
  }
  Term negated = conclusion[0].args()[0];
  Term instance = conclusion[0].args()[1];
  if (!negated.is_not() || !negated.args()[0].is_binder() ||
      negated.args()[0].binder() != BinderKind::Forall) {
    return Outcome::fail("first disjunct is not a negated forall");
  }
  Term quantified = negated.args()[0];
  Substitution sigma;
  for (const RuleArg& arg : args) {
    const auto* assign = std::get_if<AssignArg>(&arg);
    if (!assign) return Outcome::fail("argument is not an assignment");
    auto bound = quantified.bound();
    auto it = std::find_if(bound.begin(), bound.end(), [&](Term v) {
      return v.name() == assign->variable.name();
    });
    if (it == bound.end()) {
      return Outcome::fail("instantiation for unbound variable " +
                           assign->variable.name());
    }
    if (!(it->sort() == assign->value.sort())) {
      return Outcome::fail("sort mismatch for variable " + it->name());
    }
    if (sigma.count(*it)) {
      return Outcome::fail("variable " + it->name() + " instantiated twice");
    }
    sigma.emplace(*it, assign->value);
  }
  for (Term v : quantified.bound()) {
    if (!sigma.count(v)) {
      return Outcome::fail("missing instantiation for variable " + v.name());
    }
  }
  Term expected = substitute(tm, quantified.body(), sigma);
  if (alpha_equal(expected, instance)) return Outcome::ok();
  return Outcome::fail("instance mismatch");
}

}  // namespace alethe
