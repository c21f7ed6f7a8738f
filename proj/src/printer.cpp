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
#include "alethe/printer.hpp"

namespace alethe {

namespace {

std::string sort_text(const Sort& s) {
  return s.kind() == SortKind::Uninterpreted ? quote_symbol(s.name())
                                             : s.to_string();
}

std::string typed_variable(Term v) {
  return "(" + quote_symbol(v.name()) + " " + sort_text(v.sort()) + ")";
}

struct CommandPrinter {
  std::string operator()(const Assume& a) const {
    return "(assume " + quote_symbol(a.id) + " " + to_string(a.term) + ")";
  }

  std::string operator()(const Step& s) const {
    std::string out = "(step " + quote_symbol(s.id) + " " +
                      to_string(s.clause) + " :rule " + quote_symbol(s.rule);
    if (!s.premises.empty()) {
      out += " :premises (";
      for (std::size_t i = 0; i < s.premises.size(); ++i) {
        if (i) out += ' ';
        out += quote_symbol(s.premises[i]);
      }
      out += ')';
    }
    if (!s.args.empty()) {
      out += " :args (";
      for (std::size_t i = 0; i < s.args.size(); ++i) {
        if (i) out += ' ';
        out += print_arg(s.args[i]);
      }
      out += ')';
    }
    return out + ")";
  }

  std::string operator()(const Anchor& a) const {
    std::string out = "(anchor :step " + quote_symbol(a.target_step);
    if (!a.assignments.empty()) {
      out += " :args (";
      for (std::size_t i = 0; i < a.assignments.size(); ++i) {
        if (i) out += ' ';
        const ContextAssignment& c = a.assignments[i];
        if (c.value) {
          out += "(:= " + typed_variable(c.variable) + " " +
                 to_string(*c.value) + ")";
        } else {
          out += typed_variable(c.variable);
        }
      }
      out += ')';
    }
    return out + ")";
  }

  std::string operator()(const FunctionDefinition& d) const {
    std::string out = "(define-fun " + quote_symbol(d.name) + " (";
    for (std::size_t i = 0; i < d.params.size(); ++i) {
      if (i) out += ' ';
      out += typed_variable(d.params[i]);
    }
    return out + ") " + sort_text(d.codomain) + " " + to_string(d.body) + ")";
  }
};

}  // namespace

std::string print_arg(const RuleArg& arg) {
  if (auto* t = std::get_if<TermArg>(&arg)) return to_string(t->term);
  if (auto* a = std::get_if<AssignArg>(&arg)) {
    return "(:= " + typed_variable(a->variable) + " " + to_string(a->value) +
           ")";
  }
  return format_rational(std::get<RationalArg>(arg).value, false);
}

std::string print_command(const ProofCommand& command) {
  return std::visit(CommandPrinter{}, command);
}

std::string print_proof(std::span<const ProofCommand> commands) {
  std::string out;
  for (const ProofCommand& c : commands) {
    out += print_command(c);
    out += '\n';
  }
  return out;
}

}  // namespace alethe
