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
#include "alethe/elaborator.hpp"

#include <unordered_map>
#include <unordered_set>

#include "alethe/error.hpp"

namespace alethe {

namespace {

bool unit_equality(const Clause& c, Term& lhs, Term& rhs) {
  if (c.size() != 1 || !c[0].is_eq()) return false;
  lhs = c[0].args()[0];
  rhs = c[0].args()[1];
  return true;
}

[[noreturn]] void unelaborable(const Step& step, const std::string& why) {
  throw Error(ErrorKind::Unelaborable, "step '" + step.id + "': " + why);
}

}  // namespace

std::vector<Step> elaborate_trans(
    TermManager& tm, const Step& step, std::span<const Clause> premises,
    DefinitionExpander* expander,
    const std::function<bool(const std::string&)>& taken_ids) {
  auto view = [&](Term t) { return expander ? expander->expand(t) : t; };
  Term from, to;
  if (!unit_equality(step.clause, from, to)) {
    unelaborable(step, "conclusion is not a unit equality");
  }
  if (premises.size() != step.premises.size()) {
    unelaborable(step, "premise clauses do not match premise ids");
  }
  std::vector<std::pair<Term, Term>> original;
  std::vector<std::pair<Term, Term>> searched;
  for (const Clause& p : premises) {
    Term l, r;
    if (!unit_equality(p, l, r)) {
      unelaborable(step, "premise is not a unit equality");
    }
    original.emplace_back(l, r);
    searched.emplace_back(view(l), view(r));
  }
  auto chain = find_trans_chain(searched, view(from), view(to));
  if (!chain) unelaborable(step, "no transitivity chain exists");

  bool identity = true;
  for (std::size_t i = 0; i < chain->size(); ++i) {
    identity &= (*chain)[i].premise == i && !(*chain)[i].flipped;
  }
  if (identity) return {step};

  std::vector<Step> out;
  Step rewritten = step;
  rewritten.premises.clear();
  std::size_t counter = 0;
  for (const ChainLink& link : *chain) {
    const std::string& premise_id = step.premises[link.premise];
    if (!link.flipped) {
      rewritten.premises.push_back(premise_id);
      continue;
    }
    std::string id = step.id + ".s" + std::to_string(++counter);
    if (taken_ids && taken_ids(id)) {
      throw Error(ErrorKind::Internal, "inserted step id '" + id +
                                           "' collides with an existing step");
    }
    const auto& [l, r] = original[link.premise];
    out.push_back(Step{id, {tm.mk_eq(r, l)}, "symm", {premise_id}, {}});
    rewritten.premises.push_back(id);
  }
  out.push_back(std::move(rewritten));
  return out;
}

ElaborationResult elaborate_proof(const Problem& problem,
                                  std::span<const ProofCommand> commands,
                                  const StrictnessConfig& target) {
  TermManager& tm = *problem.terms;
  SignatureTable sig = problem.signature;
  DefinitionExpander expander(tm, sig);
  int level = target.level("trans");

  std::unordered_set<std::string> ids;
  for (const ProofCommand& c : commands) {
    if (!command_id(c).empty()) ids.insert(command_id(c));
  }
  auto taken = [&](const std::string& id) { return ids.count(id) > 0; };

  ElaborationResult result;
  std::unordered_map<std::string, Clause> clauses;
  for (const ProofCommand& command : commands) {
    if (const auto* def = std::get_if<FunctionDefinition>(&command)) {
      sig.define_function(
          Definition{def->name, def->params, def->codomain, def->body});
    } else if (const auto* assume = std::get_if<Assume>(&command)) {
      clauses[assume->id] = {assume->term};
    }
    const auto* step = std::get_if<Step>(&command);
    if (!step) {
      result.commands.push_back(command);
      continue;
    }
    clauses[step->id] = step->clause;
    if (step->rule != "trans") {
      result.commands.push_back(command);
      continue;
    }
    std::vector<Clause> premises;
    bool resolved = true;
    for (const std::string& p : step->premises) {
      auto it = clauses.find(p);
      if (it == clauses.end()) {
        resolved = false;
        break;
      }
      premises.push_back(it->second);
    }
    if (!resolved) {
      result.unelaborable.push_back(step->id);
      result.commands.push_back(command);
      continue;
    }
    std::vector<Clause> expanded;
    for (const Clause& p : premises) expanded.push_back(expander.expand(p));
    if (check_trans(expanded, expander.expand(step->clause), level)) {
      result.commands.push_back(command);
      continue;
    }
    try {
      std::vector<Step> steps =
          elaborate_trans(tm, *step, premises, &expander, taken);
      result.inserted += steps.size() - 1;
      ++result.rewritten;
      for (Step& s : steps) {
        ids.insert(s.id);
        result.commands.emplace_back(std::move(s));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unelaborable) throw;
      result.unelaborable.push_back(step->id);
      result.commands.push_back(command);
    }
  }
  return result;
}

// --- pruning --------------------------------------------------------------

namespace {

void collect_symbols(Term t, std::unordered_set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Variable:
      return;
    case TermKind::Constant:
      if (!t.is_numeral()) out.insert(t.name());
      return;
    case TermKind::Application:
      out.insert(t.name());
      for (Term a : t.args()) collect_symbols(a, out);
      return;
    case TermKind::Binder:
      collect_symbols(t.body(), out);
      return;
  }
}

std::unordered_set<std::string> symbols_of(const ProofCommand& command) {
  std::unordered_set<std::string> out;
  if (const auto* a = std::get_if<Assume>(&command)) {
    collect_symbols(a->term, out);
  } else if (const auto* s = std::get_if<Step>(&command)) {
    for (Term t : s->clause) collect_symbols(t, out);
    for (const RuleArg& arg : s->args) {
      if (const auto* ta = std::get_if<TermArg>(&arg)) {
        collect_symbols(ta->term, out);
      } else if (const auto* aa = std::get_if<AssignArg>(&arg)) {
        collect_symbols(aa->value, out);
      }
    }
  } else if (const auto* an = std::get_if<Anchor>(&command)) {
    for (const ContextAssignment& c : an->assignments) {
      if (c.value) collect_symbols(*c.value, out);
    }
  } else if (const auto* d = std::get_if<FunctionDefinition>(&command)) {
    collect_symbols(d->body, out);
  }
  return out;
}

}  // namespace

std::vector<ProofCommand> prune(std::span<const ProofCommand> commands,
                                const std::optional<std::string>& goal) {
  const std::size_t n = commands.size();
  std::unordered_map<std::string, std::size_t> by_id;
  std::unordered_map<std::string, std::size_t> definitions;
  // For every command, the [anchor, closing step] range of the innermost
  // subproof containing it; for closing steps, their own subproof.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> enclosing(n);
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> closes(n);
  std::optional<std::size_t> goal_index;

  std::vector<std::size_t> open;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) {
    const ProofCommand& c = commands[i];
    if (const auto* d = std::get_if<FunctionDefinition>(&c)) {
      definitions[d->name] = i;
    }
    const std::string& id = command_id(c);
    if (!id.empty()) by_id[id] = i;
    const auto* step = std::get_if<Step>(&c);
    if (step && !open.empty() &&
        std::get<Anchor>(commands[open.back()]).target_step == step->id) {
      std::pair<std::size_t, std::size_t> range{open.back(), i};
      closes[i] = range;
      for (std::size_t m : members.back()) enclosing[m] = range;
      open.pop_back();
      members.pop_back();
    }
    if (!open.empty()) members.back().push_back(i);
    if (std::holds_alternative<Anchor>(c)) {
      open.push_back(i);
      members.emplace_back();
    }
    if (step) {
      if (goal && *goal == step->id) goal_index = i;
      if (!goal && !goal_index && open.empty() && step->clause.empty()) {
        goal_index = i;
      }
    }
  }
  if (goal && !goal_index) {
    if (auto it = by_id.find(*goal); it != by_id.end()) goal_index = it->second;
  }
  if (!goal_index) {
    throw Error(ErrorKind::NoGoal,
                goal ? "goal step '" + *goal + "' not found"
                     : "no step concludes the empty clause");
  }

  std::vector<bool> keep(n, false);
  std::vector<std::size_t> work;
  auto mark = [&](std::size_t i) {
    if (!keep[i]) {
      keep[i] = true;
      work.push_back(i);
    }
  };
  auto mark_range = [&](const std::pair<std::size_t, std::size_t>& r) {
    for (std::size_t k = r.first; k <= r.second; ++k) mark(k);
  };
  mark(*goal_index);
  while (!work.empty()) {
    std::size_t i = work.back();
    work.pop_back();
    const ProofCommand& c = commands[i];
    if (const auto* step = std::get_if<Step>(&c)) {
      for (const std::string& p : step->premises) {
        if (auto it = by_id.find(p); it != by_id.end()) mark(it->second);
      }
    }
    if (closes[i]) mark_range(*closes[i]);
    if (enclosing[i]) mark_range(*enclosing[i]);
    for (const std::string& symbol : symbols_of(c)) {
      if (auto it = definitions.find(symbol); it != definitions.end()) {
        mark(it->second);
      }
    }
  }

  std::vector<ProofCommand> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) out.push_back(commands[i]);
  }
  return out;
}

}  // namespace alethe
