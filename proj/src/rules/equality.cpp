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

#include "alethe/rules.hpp"

namespace alethe {

namespace {

bool unit_equality(const Clause& c, Term& lhs, Term& rhs) {
  if (c.size() != 1 || !c[0].is_eq()) return false;
  lhs = c[0].args()[0];
  rhs = c[0].args()[1];
  return true;
}

std::string chain_mismatch(std::size_t index) {
  return "chain mismatch at premise " + std::to_string(index + 1);
}

using Equalities = std::vector<std::pair<Term, Term>>;

std::optional<std::vector<ChainLink>> greedy_chain(const Equalities& eqs,
                                                   Term from, Term to,
                                                   std::size_t first) {
  std::vector<bool> used(eqs.size(), false);
  std::vector<ChainLink> chain;
  Term current = from;
  for (std::size_t n = 0; n < eqs.size(); ++n) {
    std::size_t pick = eqs.size();
    if (n == 0) {
      pick = first;
    } else {
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (!used[i] &&
            (eqs[i].first == current || eqs[i].second == current)) {
          pick = i;
          break;
        }
      }
    }
    if (pick == eqs.size()) return std::nullopt;
    bool flipped = !(eqs[pick].first == current);
    current = flipped ? eqs[pick].first : eqs[pick].second;
    used[pick] = true;
    chain.push_back({pick, flipped});
  }
  if (!(current == to)) return std::nullopt;
  return chain;
}

std::optional<std::vector<ChainLink>> search_from(const Equalities& eqs,
                                                  Term from, Term to) {
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (!(eqs[i].first == from || eqs[i].second == from)) continue;
    if (auto chain = greedy_chain(eqs, from, to, i)) return chain;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<ChainLink>> find_trans_chain(
    std::span<const std::pair<Term, Term>> equalities, Term from, Term to) {
  Equalities eqs(equalities.begin(), equalities.end());
  if (eqs.empty()) return std::nullopt;
  if (auto chain = search_from(eqs, from, to)) return chain;
  auto backwards = search_from(eqs, to, from);
  if (!backwards) return std::nullopt;
  // Walk the reversed chain from `from` to recompute orientations.
  std::vector<ChainLink> chain;
  Term current = from;
  for (auto it = backwards->rbegin(); it != backwards->rend(); ++it) {
    const auto& [lhs, rhs] = eqs[it->premise];
    bool flipped = !(lhs == current);
    current = flipped ? lhs : rhs;
    chain.push_back({it->premise, flipped});
  }
  return chain;
}

Outcome check_trans(std::span<const Clause> premises, const Clause& conclusion,
                    int level) {
  Term from, to;
  if (!unit_equality(conclusion, from, to)) {
    return Outcome::fail("conclusion is not a unit equality");
  }
  if (premises.empty()) return Outcome::fail("trans without premises");
  Equalities eqs;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    Term l, r;
    if (!unit_equality(premises[i], l, r)) {
      return Outcome::fail("premise " + std::to_string(i + 1) +
                           " is not a unit equality");
    }
    eqs.emplace_back(l, r);
  }

  if (level <= 1) {
    Term current = from;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (!(eqs[i].first == current)) return Outcome::fail(chain_mismatch(i));
      current = eqs[i].second;
    }
    if (!(current == to)) return Outcome::fail(chain_mismatch(eqs.size() - 1));
    return Outcome::ok();
  }

  if (level == 2) {
    // Premises in the given order; the chain may run from either endpoint.
    auto walk = [&](Term start, Term end) -> std::optional<std::size_t> {
      Term current = start;
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (eqs[i].first == current) {
          current = eqs[i].second;
        } else if (eqs[i].second == current) {
          current = eqs[i].first;
        } else {
          return i;
        }
      }
      if (!(current == end)) return eqs.size() - 1;
      return std::nullopt;
    };
    auto forward = walk(from, to);
    if (!forward) return Outcome::ok();
    if (!walk(to, from)) return Outcome::ok();
    return Outcome::fail(chain_mismatch(*forward));
  }

  if (find_trans_chain(eqs, from, to)) return Outcome::ok();
  return Outcome::fail("no transitivity chain connects the conclusion");
}

Outcome check_refl(const Clause& conclusion, const Context& ctx) {
  Term lhs, rhs;
  if (!unit_equality(conclusion, lhs, rhs)) {
    return Outcome::fail("conclusion is not a unit equality");
  }
  if (lhs == rhs) return Outcome::ok();
  if (ctx.maps(lhs, rhs) || ctx.maps(rhs, lhs)) return Outcome::ok();
  return Outcome::fail("not reflexive under context");
}

Outcome check_symm(std::span<const Clause> premises, const Clause& conclusion) {
  Term lhs, rhs;
  if (!unit_equality(conclusion, lhs, rhs)) {
    return Outcome::fail("conclusion is not a unit equality");
  }
  if (premises.size() != 1) return Outcome::fail("symm expects one premise");
  Term pl, pr;
  if (!unit_equality(premises[0], pl, pr)) {
    return Outcome::fail("premise 1 is not a unit equality");
  }
  if (pl == rhs && pr == lhs) return Outcome::ok();
  return Outcome::fail("conclusion is not the flipped premise");
}

Outcome check_cong(std::span<const Clause> premises, const Clause& conclusion,
                   const Context& ctx) {
  Term lhs, rhs;
  if (!unit_equality(conclusion, lhs, rhs)) {
    return Outcome::fail("conclusion is not a unit equality");
  }
  if (!lhs.is_application() || !rhs.is_application()) {
    return Outcome::fail("sides are not function applications");
  }
  if (lhs.name() != rhs.name() || lhs.args().size() != rhs.args().size()) {
    return Outcome::fail("different function symbols or arities");
  }
  Equalities eqs;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    Term l, r;
    if (!unit_equality(premises[i], l, r)) {
      return Outcome::fail("premise " + std::to_string(i + 1) +
                           " is not a unit equality");
    }
    eqs.emplace_back(l, r);
  }
  for (std::size_t i = 0; i < lhs.args().size(); ++i) {
    Term t = lhs.args()[i];
    Term s = rhs.args()[i];
    if (t == s) continue;
    bool by_premise = std::any_of(eqs.begin(), eqs.end(), [&](const auto& e) {
      return (e.first == t && e.second == s) || (e.first == s && e.second == t);
    });
    if (by_premise || ctx.maps(t, s)) continue;
    return Outcome::fail("argument " + std::to_string(i + 1) + " unjustified");
  }
  return Outcome::ok();
}

}  // namespace alethe
