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
#include "alethe/checker.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

#include "alethe/error.hpp"

namespace alethe {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Valid: return "valid";
    case Verdict::ValidModuloAssumptions: return "valid-modulo-assumptions";
    case Verdict::Incomplete: return "incomplete";
    case Verdict::Invalid: return "invalid";
    case Verdict::Error: return "error";
  }
  return "?";
}

std::string_view to_string(StepStatus status) {
  switch (status) {
    case StepStatus::Ok: return "ok";
    case StepStatus::Failure: return "failure";
    case StepStatus::Assumed: return "assumed";
  }
  return "?";
}

const StepResult* CheckReport::find(std::string_view id) const {
  for (const StepResult& r : steps) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const StepResult& r) {
        return r.status == StepStatus::Failure;
      }));
}

// --- premise scoping ------------------------------------------------------

void PremiseResolver::enter_subproof() { active_.push_back(next_scope_++); }

void PremiseResolver::leave_subproof() { active_.pop_back(); }

void PremiseResolver::record(const std::string& id, Clause clause) {
  entries_[id] = Entry{std::move(clause), active_.back()};
}

const Clause& PremiseResolver::resolve(const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw Error(ErrorKind::UnknownPremise, "unknown premise '" + id + "'");
  }
  if (std::find(active_.begin(), active_.end(), it->second.scope) ==
      active_.end()) {
    throw Error(ErrorKind::ScopeError,
                "premise '" + id + "' is inside a closed subproof");
  }
  return it->second.clause;
}

// --- proof walking --------------------------------------------------------

namespace {

struct Task {
  std::size_t result_index;
  const Step* step;
  std::vector<Clause> premises;
  Clause conclusion;
  std::vector<RuleArg> args;
  Context context;
  std::optional<Anchor> anchor;
  std::vector<Clause> subproof;
};

struct OpenSubproof {
  Anchor anchor;
  std::vector<Clause> conclusions;
};

RuleArg expand_arg(DefinitionExpander& ex, const RuleArg& arg) {
  if (auto* t = std::get_if<TermArg>(&arg)) return TermArg{ex.expand(t->term)};
  if (auto* a = std::get_if<AssignArg>(&arg)) {
    return AssignArg{a->variable, ex.expand(a->value)};
  }
  return arg;
}

Anchor expand_anchor(DefinitionExpander& ex, const Anchor& anchor) {
  Anchor out{anchor.target_step, {}};
  for (const ContextAssignment& a : anchor.assignments) {
    out.assignments.push_back(
        {a.variable, a.value ? std::optional<Term>(ex.expand(*a.value))
                             : std::nullopt});
  }
  return out;
}

void run_task(Task& task, const RuleRegistry& rules, const CheckOptions& opts,
              TermManager& tm, StepResult& result) {
  const RuleChecker* checker = rules.find(task.step->rule);
  if (!checker) {
    if (opts.skip_unknown) {
      result.status = StepStatus::Assumed;
      result.reason = "unknown rule, assumed";
    } else {
      result.status = StepStatus::Failure;
      result.reason = "unknown rule '" + task.step->rule + "'";
    }
    return;
  }
  RuleInput input{tm,
                  *task.step,
                  task.premises,
                  task.conclusion,
                  task.args,
                  task.context,
                  opts.strictness,
                  task.anchor ? &*task.anchor : nullptr,
                  task.subproof};
  try {
    Outcome outcome = (*checker)(input);
    if (outcome) {
      result.status = StepStatus::Ok;
      result.reason = outcome.note();
    } else {
      result.status = StepStatus::Failure;
      result.reason = outcome.reason();
    }
  } catch (const std::exception& e) {
    result.status = StepStatus::Failure;
    result.reason = e.what();
  }
}

}  // namespace

CheckReport check_proof(const Problem& problem,
                        std::span<const ProofCommand> commands,
                        const StrictnessConfig& strictness) {
  CheckOptions options;
  options.strictness = strictness;
  return check_proof(problem, commands, options);
}

CheckReport check_proof(const Problem& problem,
                        std::span<const ProofCommand> commands,
                        const CheckOptions& options) {
  static const RuleRegistry kStandard = RuleRegistry::standard();
  const RuleRegistry& rules = options.rules ? *options.rules : kStandard;
  TermManager& tm = *problem.terms;
  SignatureTable sig = problem.signature;
  DefinitionExpander expander(tm, sig);
  CheckReport report;

  std::unordered_set<Term> assertions;
  for (const Assertion& a : problem.assertions) {
    assertions.insert(expander.expand(a.term));
  }

  PremiseResolver resolver;
  Context context;
  std::vector<OpenSubproof> open;
  std::vector<Task> tasks;
  std::unordered_set<std::string> seen_ids;
  bool concludes_empty = false;
  bool goal_found = false;

  for (const ProofCommand& command : commands) {
    if (const auto* def = std::get_if<FunctionDefinition>(&command)) {
      try {
        sig.define_function(
            Definition{def->name, def->params, def->codomain, def->body});
      } catch (const Error& e) {
        report.verdict = Verdict::Error;
        report.message = e.what();
        return report;
      }
      continue;
    }
    if (const auto* anchor = std::get_if<Anchor>(&command)) {
      Anchor expanded = expand_anchor(expander, *anchor);
      context.push(frame_of(expanded));
      resolver.enter_subproof();
      open.push_back({std::move(expanded), {}});
      continue;
    }
    const std::string& id = command_id(command);
    if (options.goal && *options.goal == id) goal_found = true;
    StepResult result;
    result.id = id;
    if (!seen_ids.insert(id).second) {
      result.rule = std::holds_alternative<Assume>(command)
                        ? "assume"
                        : std::get<Step>(command).rule;
      result.status = StepStatus::Failure;
      result.reason = "duplicate step id";
      report.steps.push_back(std::move(result));
      continue;
    }

    if (const auto* assume = std::get_if<Assume>(&command)) {
      result.rule = "assume";
      Term t = expander.expand(assume->term);
      if (!assertions.count(t)) {
        result.status = StepStatus::Failure;
        result.reason = "assumption is not an assertion of the problem";
      }
      resolver.record(id, {t});
      if (!open.empty()) open.back().conclusions.push_back({t});
      ++report.statistics["assume"];
      report.steps.push_back(std::move(result));
      continue;
    }

    const Step& step = std::get<Step>(command);
    result.rule = step.rule;
    ++report.statistics[step.rule];
    Task task;
    task.step = &step;
    task.conclusion = expander.expand(step.clause);
    for (const RuleArg& arg : step.args) {
      task.args.push_back(expand_arg(expander, arg));
    }
    bool closes = !open.empty() && open.back().anchor.target_step == id;
    if (closes) {
      task.anchor = std::move(open.back().anchor);
      task.subproof = std::move(open.back().conclusions);
      open.pop_back();
      context.pop();
      resolver.leave_subproof();
    }
    task.context = context;
    bool premises_ok = true;
    for (const std::string& p : step.premises) {
      try {
        task.premises.push_back(resolver.resolve(p));
      } catch (const Error& e) {
        result.status = StepStatus::Failure;
        result.reason = e.message();
        premises_ok = false;
        break;
      }
    }
    resolver.record(id, task.conclusion);
    if (!open.empty()) open.back().conclusions.push_back(task.conclusion);
    if (open.empty() && step.clause.empty()) concludes_empty = true;
    task.result_index = report.steps.size();
    report.steps.push_back(std::move(result));
    if (premises_ok) tasks.push_back(std::move(task));
  }

  for (const OpenSubproof& o : open) {
    report.steps.push_back({o.anchor.target_step, "anchor", StepStatus::Failure,
                            "subproof is never closed"});
  }

  unsigned jobs = options.jobs == 0 ? std::thread::hardware_concurrency()
                                    : options.jobs;
  jobs = std::max(1u, std::min<unsigned>(jobs, tasks.size()));
  if (jobs <= 1) {
    for (Task& task : tasks) {
      run_task(task, rules, options, tm, report.steps[task.result_index]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          run_task(tasks[i], rules, options, tm,
                   report.steps[tasks[i].result_index]);
        }
      });
    }
  }

  for (const StepResult& r : report.steps) {
    if (!r.reason.empty() && r.status == StepStatus::Ok) {
      ++report.statistics[r.rule + ": " + r.reason];
    }
  }

  if (options.goal && !goal_found) {
    report.verdict = Verdict::Error;
    report.message = "NoGoal: goal step '" + *options.goal + "' not found";
    return report;
  }
  bool any_assumed = false;
  for (const StepResult& r : report.steps) {
    if (r.status == StepStatus::Failure) {
      report.verdict = Verdict::Invalid;
      return report;
    }
    any_assumed |= r.status == StepStatus::Assumed;
  }
  if (!options.goal && !concludes_empty && !commands.empty()) {
    report.verdict = Verdict::Incomplete;
    report.message = "all steps ok, no conclusion";
    return report;
  }
  report.verdict =
      any_assumed ? Verdict::ValidModuloAssumptions : Verdict::Valid;
  return report;
}

}  // namespace alethe
