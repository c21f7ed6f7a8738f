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

#include <string>

#include "alethe/checker.hpp"

namespace alethe {

// One JSON object per step, {id, rule, verdict, reason?}, followed by a
// summary object {verdict, steps, failures}. Every line ends with '\n'.
std::string format_jsonl(const CheckReport& report);

// "<step-id>: <rule>: <reason>" per failure, then "verdict: <verdict>".
std::string format_text(const CheckReport& report);

}  // namespace alethe
