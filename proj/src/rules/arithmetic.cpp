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
#include <map>

#include "alethe/rules.hpp"

namespace alethe {

namespace {

// sum(coeffs[a] * a) + constant
struct LinearForm {
  std::map<Term, mpq_class> coeffs;
  mpq_class constant = 0;

  void add(const LinearForm& other, const mpq_class& scale) {
    for (const auto& [atom, c] : other.coeffs) coeffs[atom] += scale * c;
    constant += scale * other.constant;
  }

  bool is_constant() const {
    for (const auto& [atom, c] : coeffs) {
      if (sgn(c) != 0) return false;
    }
    return true;
  }
};

bool linearize(Term t, const mpq_class& scale, LinearForm& out) {
  if (!t.sort().is_numeric()) return false;
  if (t.is_numeral()) {
    out.constant += scale * t.value();
    return true;
  }
  if (t.is_app("+")) {
    for (Term a : t.args()) {
      if (!linearize(a, scale, out)) return false;
    }
    return true;
  }
  if (t.is_app("-")) {
    if (t.args().size() == 1) return linearize(t.args()[0], -scale, out);
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (!linearize(t.args()[i], i == 0 ? scale : mpq_class(-scale), out)) {
        return false;
      }
    }
    return true;
  }
  if (t.is_app("*")) {
    mpq_class factor = 1;
    Term variable;
    for (Term a : t.args()) {
      if (a.is_numeral()) {
        factor *= a.value();
      } else if (variable.is_null()) {
        variable = a;
      } else {
        return false;
      }
    }
    if (variable.is_null()) {
      out.constant += scale * factor;
      return true;
    }
    return linearize(variable, scale * factor, out);
  }
  if (t.is_app("/")) {
    mpq_class divisor = 1;
    for (std::size_t i = 1; i < t.args().size(); ++i) {
      if (!t.args()[i].is_numeral() || sgn(t.args()[i].value()) == 0) {
        return false;
      }
      divisor *= t.args()[i].value();
    }
    return linearize(t.args()[0], scale / divisor, out);
  }
  if (t.is_app("to_real")) return linearize(t.args()[0], scale, out);
  out.coeffs[t] += scale;
  return true;
}

enum class Relation { Less, LessEq, Equal };

// The constraint asserted by the negation of `literal`, as `form ⋈ 0`.
std::optional<std::pair<LinearForm, Relation>> negated_constraint(
    Term literal, std::string& why) {
  bool positive = true;
  Term atom = literal;
  if (atom.is_not()) {
    positive = false;
    atom = atom.args()[0];
  }
  if (!atom.is_application() || atom.args().size() != 2 ||
      !atom.args()[0].sort().is_numeric()) {
    why = "nonlinear literal";
    return std::nullopt;
  }
  const std::string& op = atom.name();
  Term l = atom.args()[0];
  Term r = atom.args()[1];
  // Operator of the constraint that must hold when the literal is false.
  std::string rel = op;
  if (positive) {
    if (op == "<") rel = ">=";
    else if (op == "<=") rel = ">";
    else if (op == ">") rel = "<=";
    else if (op == ">=") rel = "<";
    else if (op == "=") {
      why = "equality literal cannot be combined";
      return std::nullopt;
    }
  }
  LinearForm form;
  Relation relation;
  bool ok = true;
  if (rel == "<" || rel == "<=" || rel == "=") {
    ok = linearize(l, 1, form) && linearize(r, -1, form);
    relation = rel == "<"    ? Relation::Less
               : rel == "<=" ? Relation::LessEq
                             : Relation::Equal;
  } else if (rel == ">" || rel == ">=") {
    ok = linearize(r, 1, form) && linearize(l, -1, form);
    relation = rel == ">" ? Relation::Less : Relation::LessEq;
  } else {
    why = "nonlinear literal";
    return std::nullopt;
  }
  if (!ok) {
    why = "nonlinear literal";
    return std::nullopt;
  }
  return std::make_pair(std::move(form), relation);
}

}  // namespace

Outcome check_la_generic(const Clause& conclusion,
                         std::span<const RuleArg> args) {
  if (args.size() != conclusion.size()) {
    return Outcome::fail("coefficient count mismatch");
  }
  LinearForm sum;
  bool strict = false;
  bool all_equalities = true;
  bool any_weight = false;
  for (std::size_t i = 0; i < conclusion.size(); ++i) {
    const auto* coefficient = std::get_if<RationalArg>(&args[i]);
    if (!coefficient) {
      return Outcome::fail("argument " + std::to_string(i + 1) +
                           " is not a rational coefficient");
    }
    std::string why;
    auto constraint = negated_constraint(conclusion[i], why);
    if (!constraint) {
      return Outcome::fail(why + " (literal " + std::to_string(i + 1) + ")");
    }
    const auto& [form, relation] = *constraint;
    const mpq_class& c = coefficient->value;
    if (sgn(c) < 0 && relation != Relation::Equal) {
      return Outcome::fail("negative coefficient for literal " +
                           std::to_string(i + 1));
    }
    if (sgn(c) == 0) continue;
    any_weight = true;
    if (relation == Relation::Less) strict = true;
    if (relation != Relation::Equal) all_equalities = false;
    sum.add(form, c);
  }
  if (!any_weight) return Outcome::fail("all coefficients are zero");
  if (!sum.is_constant()) return Outcome::fail("combination not absurd");
  int sign = sgn(sum.constant);
  bool absurd = all_equalities ? sign != 0 : strict ? sign >= 0 : sign > 0;
  if (!absurd) return Outcome::fail("combination not absurd");
  return Outcome::ok();
}

}  // namespace alethe
