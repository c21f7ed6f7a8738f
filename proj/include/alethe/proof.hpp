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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alethe/signature.hpp"
#include "alethe/term.hpp"

namespace alethe {

struct Assertion {
  std::optional<std::string> name;
  Term term;

  friend bool operator==(const Assertion&, const Assertion&) = default;
};

struct Problem {
  std::shared_ptr<TermManager> terms = std::make_shared<TermManager>();
  std::string logic;
  SignatureTable signature;
  std::vector<Assertion> assertions;
  std::map<std::string, Term> named_terms;
};

// --- rule arguments -------------------------------------------------------

struct TermArg {
  Term term;
  friend bool operator==(const TermArg&, const TermArg&) = default;
};

struct AssignArg {
  Term variable;
  Term value;
  friend bool operator==(const AssignArg&, const AssignArg&) = default;
};

struct RationalArg {
  mpq_class value;
  friend bool operator==(const RationalArg& a, const RationalArg& b) {
    return a.value == b.value;
  }
};

using RuleArg = std::variant<TermArg, AssignArg, RationalArg>;

// --- commands -------------------------------------------------------------

struct Assume {
  std::string id;
  Term term;
  friend bool operator==(const Assume&, const Assume&) = default;
};

struct Step {
  std::string id;
  Clause clause;
  std::string rule;
  std::vector<std::string> premises;
  std::vector<RuleArg> args;
  friend bool operator==(const Step&, const Step&) = default;
};

// A context entry opened by an anchor: a fixed variable when `value` is
// empty, otherwise the mapping `variable := value`.
struct ContextAssignment {
  Term variable;
  std::optional<Term> value;
  friend bool operator==(const ContextAssignment&,
                         const ContextAssignment&) = default;
};

struct Anchor {
  std::string target_step;
  std::vector<ContextAssignment> assignments;
  friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct FunctionDefinition {
  std::string name;
  std::vector<Term> params;
  Sort codomain;
  Term body;
  friend bool operator==(const FunctionDefinition&,
                         const FunctionDefinition&) = default;
};

using ProofCommand = std::variant<Assume, Step, Anchor, FunctionDefinition>;

// Id of an Assume or Step, empty for the other commands.
const std::string& command_id(const ProofCommand& command);

}  // namespace alethe
