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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alethe/checker.hpp"
#include "alethe/proof.hpp"

namespace alethe {

struct ElaborationResult {
  std::vector<ProofCommand> commands;
  std::size_t inserted = 0;
  std::size_t rewritten = 0;
  std::vector<std::string> unelaborable;
};

// Rewrites a trans step into a strictly ordered and oriented chain, preceded
// by `symm` steps for the premises used backwards. The chain is searched on
// definition-expanded terms when an expander is given. `taken_ids` guards the
// "<id>.sN" names of the inserted steps. Throws Unelaborable when no chain
// exists.
std::vector<Step> elaborate_trans(
    TermManager& tm, const Step& step, std::span<const Clause> premises,
    DefinitionExpander* expander = nullptr,
    const std::function<bool(const std::string&)>& taken_ids = {});

// Elaborates every trans step that does not check at the target strictness.
ElaborationResult elaborate_proof(const Problem& problem,
                                  std::span<const ProofCommand> commands,
                                  const StrictnessConfig& target);

// Keeps the commands the goal depends on, in their original order. Without a
// goal id, the first top-level step concluding the empty clause is used.
// Throws NoGoal.
std::vector<ProofCommand> prune(std::span<const ProofCommand> commands,
                                const std::optional<std::string>& goal);

}  // namespace alethe
