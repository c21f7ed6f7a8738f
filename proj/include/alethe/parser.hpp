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

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "alethe/proof.hpp"

namespace alethe {

struct ParserOptions {
  // Rules allowed to conclude a subproof opened by an anchor.
  std::set<std::string, std::less<>> subproof_rules = {"bind"};
};

// Accepts set-logic, declare-sort, declare-fun, declare-const, define-fun and
// assert; check-sat, exit, set-info and set-option are ignored.
Problem parse_problem(std::string_view text);

// Parses an Alethe proof against `problem`. Terms are interned in the
// problem's term manager; proof-level define-funs extend a private copy of
// the signature.
std::vector<ProofCommand> parse_proof(std::string_view text,
                                      const Problem& problem,
                                      const ParserOptions& options = {});

}  // namespace alethe
