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
#include "alethe/report.hpp"

#include "json.hpp"

namespace alethe {

std::string format_jsonl(const CheckReport& report) {
  std::string out;
  for (const StepResult& r : report.steps) {
    nlohmann::ordered_json line;
    line["id"] = r.id;
    line["rule"] = r.rule;
    line["verdict"] = std::string(to_string(r.status));
    if (r.status != StepStatus::Ok) line["reason"] = r.reason;
    out += line.dump();
    out += '\n';
  }
  nlohmann::ordered_json summary;
  summary["verdict"] = std::string(to_string(report.verdict));
  summary["steps"] = report.steps.size();
  summary["failures"] = report.failures();
  out += summary.dump();
  out += '\n';
  return out;
}

std::string format_text(const CheckReport& report) {
  std::string out;
  for (const StepResult& r : report.steps) {
    if (r.status != StepStatus::Failure) continue;
    out += r.id + ": " + r.rule + ": " + r.reason + '\n';
  }
  out += "verdict: ";
  out += to_string(report.verdict);
  if (!report.message.empty()) out += " (" + report.message + ")";
  out += '\n';
  return out;
}

}  // namespace alethe
