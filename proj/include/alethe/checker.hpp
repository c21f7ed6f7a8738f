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
#include <vector>

#include "alethe/proof.hpp"
#include "alethe/rules.hpp"

namespace alethe {

enum class Verdict {
  Valid,
  // Every step ok, but some unknown rules were skipped.
  ValidModuloAssumptions,
  // Every step ok, but a nonempty proof establishes no goal.
  Incomplete,
  Invalid,
  Error,
};

std::string_view to_string(Verdict verdict);

enum class StepStatus { Ok, Failure, Assumed };

std::string_view to_string(StepStatus status);

struct StepResult {
  std::string id;
  std::string rule;
  StepStatus status = StepStatus::Ok;
  std::string reason;

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

struct CheckReport {
  Verdict verdict = Verdict::Valid;
  // One entry per assume and step, in proof order, plus one per unclosed
  // anchor.
  std::vector<StepResult> steps;
  // Steps per rule; notes (e.g. compatibility fallbacks) are counted too.
  std::map<std::string, std::size_t> statistics;
  // Explanation for Error and Incomplete verdicts.
  std::string message;

  const StepResult* find(std::string_view id) const;
  std::size_t failures() const;
};

struct CheckOptions {
  StrictnessConfig strictness;
  // Mark steps with unknown rules as assumed instead of failing them.
  bool skip_unknown = false;
  std::optional<std::string> goal;
  // Worker threads for step checking; 0 picks the hardware concurrency.
  unsigned jobs = 1;
  // Defaults to RuleRegistry::standard().
  const RuleRegistry* rules = nullptr;
};

CheckReport check_proof(const Problem& problem,
                        std::span<const ProofCommand> commands,
                        const StrictnessConfig& strictness);

CheckReport check_proof(const Problem& problem,
                        std::span<const ProofCommand> commands,
                        const CheckOptions& options);

// Scope-aware lookup of premise clauses while walking a proof. Steps inside a
// closed subproof are not addressable from outside it.
class PremiseResolver {
 public:
  void enter_subproof();
  void leave_subproof();
  void record(const std::string& id, Clause clause);
  // Throws UnknownPremise or ScopeError.
  const Clause& resolve(const std::string& id) const;

 private:
  struct Entry {
    Clause clause;
    std::size_t scope;
  };
  std::map<std::string, Entry, std::less<>> entries_;
  std::vector<std::size_t> active_ = {0};
  std::size_t next_scope_ = 1;
};

}  // namespace alethe
