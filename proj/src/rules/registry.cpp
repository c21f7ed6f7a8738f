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

bool Context::maps(Term from, Term to) const {
  return std::any_of(frames_.begin(), frames_.end(), [&](const Frame& f) {
    return std::any_of(f.mappings.begin(), f.mappings.end(),
                       [&](const auto& m) {
                         return m.first == from && m.second == to;
                       });
  });
}

Frame frame_of(const Anchor& anchor) {
  Frame frame;
  for (const ContextAssignment& a : anchor.assignments) {
    if (a.value) {
      frame.mappings.emplace_back(a.variable, *a.value);
    } else {
      frame.fixed.push_back(a.variable);
    }
  }
  return frame;
}

int StrictnessConfig::least_strict(std::string_view rule) {
  return rule == "trans" ? 3 : 1;
}

int StrictnessConfig::level(std::string_view rule) const {
  auto it = levels.find(rule);
  return it == levels.end() ? least_strict(rule) : it->second;
}

Outcome check_equiv_pos1(const Clause& conclusion) {
  if (conclusion.size() != 3) return Outcome::fail("shape mismatch");
  Term first = conclusion[0];
  if (!first.is_not() || !first.args()[0].is_eq()) {
    return Outcome::fail("shape mismatch");
  }
  Term a = first.args()[0].args()[0];
  Term b = first.args()[0].args()[1];
  if (!a.sort().is_bool()) return Outcome::fail("shape mismatch");
  if (!conclusion[1].is_not() || !(conclusion[1].args()[0] == a) ||
      !(conclusion[2] == b)) {
    return Outcome::fail("shape mismatch");
  }
  return Outcome::ok();
}

namespace {

Outcome no_premises(const RuleInput& in) {
  if (!in.premises.empty()) {
    return Outcome::fail("rule '" + in.step.rule + "' takes no premises");
  }
  return Outcome::ok();
}

}  // namespace

RuleRegistry RuleRegistry::standard() {
  RuleRegistry r;
  r.add("resolution", [](const RuleInput& in) {
    return check_resolution(in.premises, in.conclusion);
  });
  r.add("trans", [](const RuleInput& in) {
    return check_trans(in.premises, in.conclusion, in.strictness.level("trans"));
  });
  r.add("cong", [](const RuleInput& in) {
    const Clause& c = in.conclusion;
    if (c.size() == 1 && c[0].is_eq() && !c[0].args()[0].is_application() &&
        !c[0].args()[1].is_application()) {
      Outcome refl = check_refl(c, in.context);
      if (!refl) return refl;
      return Outcome::ok("cong used for a variable equality (checked as refl)");
    }
    return check_cong(in.premises, c, in.context);
  });
  r.add("refl", [](const RuleInput& in) {
    if (Outcome o = no_premises(in); !o) return o;
    return check_refl(in.conclusion, in.context);
  });
  r.add("symm", [](const RuleInput& in) {
    return check_symm(in.premises, in.conclusion);
  });
  r.add("bind", [](const RuleInput& in) {
    if (!in.anchor) return Outcome::fail("bind outside a subproof");
    return check_bind(in.subproof, *in.anchor, in.conclusion);
  });
  r.add("equiv_pos1", [](const RuleInput& in) {
    if (Outcome o = no_premises(in); !o) return o;
    return check_equiv_pos1(in.conclusion);
  });
  r.add("sko_ex", [](const RuleInput& in) {
    if (Outcome o = no_premises(in); !o) return o;
    return check_sko_ex(in.terms, in.conclusion, in.context);
  });
  r.add("forall_inst", [](const RuleInput& in) {
    if (Outcome o = no_premises(in); !o) return o;
    return check_forall_inst(in.terms, in.conclusion, in.args);
  });
  r.add("la_generic", [](const RuleInput& in) {
    if (Outcome o = no_premises(in); !o) return o;
    return check_la_generic(in.conclusion, in.args);
  });
  return r;
}

void RuleRegistry::add(std::string rule, RuleChecker checker) {
  rules_[std::move(rule)] = std::move(checker);
}

const RuleChecker* RuleRegistry::find(std::string_view rule) const {
  auto it = rules_.find(rule);
  return it == rules_.end() ? nullptr : &it->second;
}

std::vector<std::string> RuleRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, checker] : rules_) out.push_back(name);
  return out;
}

}  // namespace alethe
