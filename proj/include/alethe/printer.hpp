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

#include <span>
#include <string>

#include "alethe/proof.hpp"

namespace alethe {

// One command per line. Reparsing the output yields an equal command list.
std::string print_proof(std::span<const ProofCommand> commands);
std::string print_command(const ProofCommand& command);
std::string print_arg(const RuleArg& arg);

}  // namespace alethe
