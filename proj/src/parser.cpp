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
#include "alethe/parser.hpp"

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "alethe/error.hpp"
#include "alethe/sexpr.hpp"

namespace alethe {

namespace {

[[noreturn]] void parse_error(const std::string& msg, const SExpr& at) {
  throw Error(ErrorKind::ParseError, msg, at.location);
}

const SExpr& expect_symbol(const SExpr& e, const char* what) {
  if (!e.is_symbol()) parse_error(std::string("expected ") + what, e);
  return e;
}

const SExpr& expect_list(const SExpr& e, const char* what) {
  if (!e.is_list()) parse_error(std::string("expected ") + what, e);
  return e;
}

mpq_class parse_literal(const SExpr& e) {
  if (e.kind == SExpr::Kind::Numeral) return mpq_class(e.text, 10);
  // Decimal: digits '.' digits
  std::size_t dot = e.text.find('.');
  std::string digits = e.text.substr(0, dot) + e.text.substr(dot + 1);
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, e.text.size() - dot - 1);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Finds the sort given to `name` by some binder inside e, without building
// terms.
const SExpr* find_binder_sort(const SExpr& e, std::string_view name) {
  if (!e.is_list()) return nullptr;
  if (e.items.size() == 3 &&
      (e.items[0].is_symbol("forall") || e.items[0].is_symbol("exists") ||
       e.items[0].is_symbol("choice")) &&
      e.items[1].is_list()) {
    for (const SExpr& b : e.items[1].items) {
      if (b.is_list() && b.items.size() == 2 && b.items[0].is_symbol(name)) {
        return &b.items[1];
      }
    }
  }
  for (const SExpr& item : e.items) {
    if (const SExpr* found = find_binder_sort(item, name)) return found;
  }
  return nullptr;
}

// Shared term-level machinery for problems and proofs.
class TermParser {
 public:
  using NamedHook = std::function<void(const std::string&, Term, const SExpr&)>;

  TermParser(TermManager& tm, SignatureTable& sig) : tm_(tm), sig_(sig) {}

  void set_named_hook(NamedHook hook) { named_hook_ = std::move(hook); }

  Sort parse_sort(const SExpr& e) const {
    if (!e.is_symbol()) {
      throw Error(ErrorKind::UnsupportedCommand, "unsupported sort expression",
                  e.location);
    }
    if (e.text == "Bool") return Sort::boolean();
    if (e.text == "Int") return Sort::integer();
    if (e.text == "Real") return Sort::real();
    if (sig_.has_sort(e.text)) return Sort::uninterpreted(e.text);
    throw Error(ErrorKind::SortError, "unknown sort '" + e.text + "'",
                e.location);
  }

  Term parse(const SExpr& e) {
    try {
      return parse_unlocated(e);
    } catch (const Error& err) {
      if (err.location()) throw;
      throw Error(err.kind(), err.message(), e.location);
    }
  }

  Term parse_bool(const SExpr& e) {
    Term t = parse(e);
    if (!t.sort().is_bool()) {
      throw Error(ErrorKind::SortError,
                  "expected a Bool term, got sort " + t.sort().to_string(),
                  e.location);
    }
    return t;
  }

  // Anchor scopes: variables visible inside an open subproof.
  void push_anchor() { anchors_.emplace_back(); }
  void pop_anchor() { anchors_.pop_back(); }
  void add_anchor_variable(Term var) {
    anchors_.back()[var.name()] = var;
    past_context_[var.name()] = var;
  }

  void push_scope() { scopes_.emplace_back(); }
  void pop_scope() { scopes_.pop_back(); }
  void bind(const std::string& name, Term t) { scopes_.back()[name] = t; }

  std::optional<Term> lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto f = it->find(name); f != it->end()) return f->second;
    }
    for (auto it = anchors_.rbegin(); it != anchors_.rend(); ++it) {
      if (auto f = it->find(name); f != it->end()) return f->second;
    }
    if (name == "true" || name == "false") return tm_.mk_bool(name == "true");
    if (const FunctionDecl* decl = sig_.find_function(name)) {
      if (decl->domain.empty()) return tm_.mk_constant(name, decl->codomain);
      return std::nullopt;
    }
    if (auto f = past_context_.find(name); f != past_context_.end()) {
      return f->second;
    }
    return std::nullopt;
  }

  // A variable known from an open or closed subproof context.
  std::optional<Term> context_variable(const std::string& name) const {
    for (auto it = anchors_.rbegin(); it != anchors_.rend(); ++it) {
      if (auto f = it->find(name); f != it->end()) return f->second;
    }
    if (auto f = past_context_.find(name); f != past_context_.end()) {
      return f->second;
    }
    return std::nullopt;
  }

  std::vector<Term> parse_bindings(const SExpr& list) {
    expect_list(list, "a binding list");
    std::vector<Term> vars;
    std::unordered_set<std::string> seen;
    for (const SExpr& b : list.items) {
      if (!b.is_list() || b.items.size() != 2 || !b.items[0].is_symbol()) {
        parse_error("expected (<symbol> <sort>)", b);
      }
      if (!seen.insert(b.items[0].text).second) {
        parse_error("duplicate bound variable '" + b.items[0].text + "'", b);
      }
      vars.push_back(
          tm_.mk_variable(b.items[0].text, parse_sort(b.items[1])));
    }
    return vars;
  }

  TermManager& terms() { return tm_; }

 private:
  Term parse_unlocated(const SExpr& e) {
    switch (e.kind) {
      case SExpr::Kind::Symbol: {
        if (auto t = lookup(e.text)) return *t;
        if (sig_.find_function(e.text) || is_builtin_symbol(e.text)) {
          throw Error(ErrorKind::SortError,
                      "function '" + e.text + "' used without arguments",
                      e.location);
        }
        throw Error(ErrorKind::UndeclaredSymbol,
                    "undeclared symbol '" + e.text + "'", e.location);
      }
      case SExpr::Kind::Numeral:
        return tm_.mk_numeral(parse_literal(e), Sort::integer());
      case SExpr::Kind::Decimal:
        return tm_.mk_numeral(parse_literal(e), Sort::real());
      case SExpr::Kind::Keyword:
      case SExpr::Kind::String:
        parse_error("unexpected token in term position", e);
      case SExpr::Kind::List:
        break;
    }
    if (e.items.empty()) parse_error("empty application", e);
    const SExpr& head = e.items[0];
    if (!head.is_symbol()) {
      throw Error(ErrorKind::UnsupportedCommand,
                  "unsupported term head (indexed or higher-order)",
                  head.location);
    }
    const std::string& op = head.text;
    if (op == "forall" || op == "exists" || op == "choice") {
      if (e.items.size() != 3) parse_error("malformed binder", e);
      std::vector<Term> vars = parse_bindings(e.items[1]);
      push_scope();
      for (Term v : vars) bind(v.name(), v);
      Term body = parse(e.items[2]);
      pop_scope();
      BinderKind kind = op == "forall"   ? BinderKind::Forall
                        : op == "exists" ? BinderKind::Exists
                                         : BinderKind::Choice;
      return tm_.mk_binder(kind, std::move(vars), body);
    }
    if (op == "let") {
      if (e.items.size() != 3) parse_error("malformed let", e);
      expect_list(e.items[1], "let bindings");
      std::vector<std::pair<std::string, Term>> values;
      for (const SExpr& b : e.items[1].items) {
        if (!b.is_list() || b.items.size() != 2 || !b.items[0].is_symbol()) {
          parse_error("expected (<symbol> <term>)", b);
        }
        values.emplace_back(b.items[0].text, parse(b.items[1]));
      }
      push_scope();
      for (auto& [name, value] : values) bind(name, value);
      Term body = parse(e.items[2]);
      pop_scope();
      return body;
    }
    if (op == "!") {
      if (e.items.size() < 2) parse_error("malformed annotation", e);
      Term t = parse(e.items[1]);
      for (std::size_t i = 2; i < e.items.size(); ++i) {
        const SExpr& attr = e.items[i];
        if (attr.kind != SExpr::Kind::Keyword) {
          parse_error("expected an attribute keyword", attr);
        }
        if (attr.text == ":named") {
          if (i + 1 >= e.items.size()) parse_error("missing name", attr);
          const SExpr& name = expect_symbol(e.items[++i], "a name");
          if (named_hook_) named_hook_(name.text, t, name);
        } else if (i + 1 < e.items.size() &&
                   e.items[i + 1].kind != SExpr::Kind::Keyword) {
          ++i;  // attribute value, e.g. :pattern
        }
      }
      return t;
    }
    if (lookup_local(op)) {
      parse_error("variable '" + op + "' applied to arguments", head);
    }
    std::vector<Term> args;
    args.reserve(e.items.size() - 1);
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      args.push_back(parse(e.items[i]));
    }
    if (op == "-" && args.size() == 1 && args[0].is_numeral()) {
      return tm_.mk_numeral(-args[0].value(), args[0].sort());
    }
    if (op == "/" && args.size() == 2 && args[0].is_numeral() &&
        args[1].is_numeral() && sgn(args[1].value()) != 0) {
      return tm_.mk_numeral(args[0].value() / args[1].value(), Sort::real());
    }
    if (!is_builtin_symbol(op) && !sig_.find_function(op)) {
      throw Error(ErrorKind::UndeclaredSymbol,
                  "undeclared function '" + op + "'", head.location);
    }
    return apply(tm_, sig_, op, std::move(args));
  }

  bool lookup_local(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (it->count(name)) return true;
    }
    for (auto it = anchors_.rbegin(); it != anchors_.rend(); ++it) {
      if (it->count(name)) return true;
    }
    return false;
  }

  TermManager& tm_;
  SignatureTable& sig_;
  NamedHook named_hook_;
  std::vector<std::unordered_map<std::string, Term>> scopes_;
  std::vector<std::unordered_map<std::string, Term>> anchors_;
  std::unordered_map<std::string, Term> past_context_;
};

Definition parse_define_fun(const SExpr& cmd, TermParser& tp) {
  if (cmd.items.size() != 5) parse_error("malformed define-fun", cmd);
  const SExpr& name = expect_symbol(cmd.items[1], "a function name");
  std::vector<Term> params = tp.parse_bindings(cmd.items[2]);
  Sort codomain = tp.parse_sort(cmd.items[3]);
  tp.push_scope();
  for (Term p : params) tp.bind(p.name(), p);
  Term body = tp.parse(cmd.items[4]);
  tp.pop_scope();
  bool fits = body.sort() == codomain ||
              (codomain.kind() == SortKind::Real &&
               body.sort().kind() == SortKind::Int && body.is_numeral());
  if (!fits) {
    throw Error(ErrorKind::SortError,
                "body of '" + name.text + "' has sort " +
                    body.sort().to_string() + ", declared " +
                    codomain.to_string(),
                cmd.items[4].location);
  }
  if (codomain.kind() == SortKind::Real && body.sort().kind() == SortKind::Int) {
    body = tp.terms().mk_numeral(body.value(), Sort::real());
  }
  return Definition{name.text, std::move(params), codomain, body};
}

void declare_checked(SignatureTable& sig, FunctionDecl decl,
                     const SExpr& at) {
  try {
    sig.declare_function(std::move(decl));
  } catch (const Error& err) {
    throw Error(err.kind(), err.message(), at.location);
  }
}

void define_checked(SignatureTable& sig, Definition def, const SExpr& at) {
  try {
    sig.define_function(std::move(def));
  } catch (const Error& err) {
    throw Error(err.kind(), err.message(), at.location);
  }
}

// --- proofs ---------------------------------------------------------------

class ProofParser {
 public:
  ProofParser(const Problem& problem, const ParserOptions& options)
      : options_(options),
        sig_(problem.signature),
        tp_(*problem.terms, sig_) {
    tp_.set_named_hook([this](const std::string& name, Term t,
                              const SExpr& at) {
      Definition def{name, {}, t.sort(), t};
      define_checked(sig_, def, at);
      pending_.push_back(FunctionDefinition{name, {}, t.sort(), t});
    });
  }

  std::vector<ProofCommand> run(std::string_view text) {
    top_ = read_sexprs(text);
    for (index_ = 0; index_ < top_.size(); ++index_) {
      const SExpr& cmd = top_[index_];
      if (!cmd.is_list() || cmd.items.empty() || !cmd.items[0].is_symbol()) {
        parse_error("expected a proof command", cmd);
      }
      const std::string& head = cmd.items[0].text;
      if (head == "assume") {
        parse_assume(cmd);
      } else if (head == "step") {
        parse_step(cmd);
      } else if (head == "anchor") {
        parse_anchor(cmd);
      } else if (head == "define-fun") {
        Definition def = parse_define_fun(cmd, tp_);
        FunctionDefinition fd{def.name, def.params, def.codomain, def.body};
        define_checked(sig_, std::move(def), cmd.items[1]);
        emit(std::move(fd));
      } else {
        parse_error("unknown proof command '" + head + "'", cmd.items[0]);
      }
    }
    if (!open_.empty()) {
      throw Error(ErrorKind::UnclosedAnchor,
                  "subproof for step '" + open_.back().target +
                      "' is never closed",
                  open_.back().location);
    }
    return std::move(commands_);
  }

 private:
  struct OpenAnchor {
    std::string target;
    Location location;
  };

  void emit(ProofCommand cmd) {
    for (FunctionDefinition& fd : pending_) commands_.emplace_back(std::move(fd));
    pending_.clear();
    commands_.push_back(std::move(cmd));
  }

  void claim_id(const SExpr& id) {
    if (ids_.count(id.text) || reserved_.count(id.text)) {
      throw Error(ErrorKind::DuplicateStepId,
                  "duplicate step id '" + id.text + "'", id.location);
    }
  }

  void parse_assume(const SExpr& cmd) {
    if (cmd.items.size() != 3) parse_error("malformed assume", cmd);
    const SExpr& id = expect_symbol(cmd.items[1], "a step id");
    claim_id(id);
    Term t = tp_.parse_bool(cmd.items[2]);
    ids_.insert(id.text);
    emit(Assume{id.text, t});
  }

  Clause parse_clause(const SExpr& e) {
    if (!e.is_list() || e.items.empty() || !e.items[0].is_symbol("cl")) {
      parse_error("expected a clause (cl ...)", e);
    }
    Clause clause;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      clause.push_back(tp_.parse_bool(e.items[i]));
    }
    return clause;
  }

  void parse_step(const SExpr& cmd) {
    if (cmd.items.size() < 3) parse_error("malformed step", cmd);
    const SExpr& id = expect_symbol(cmd.items[1], "a step id");
    bool closes = !open_.empty() && open_.back().target == id.text;
    if (!closes) {
      claim_id(id);
    } else if (ids_.count(id.text)) {
      throw Error(ErrorKind::DuplicateStepId,
                  "duplicate step id '" + id.text + "'", id.location);
    }
    Step step;
    step.id = id.text;
    const SExpr& clause_expr = cmd.items[2];
    step.clause = parse_clause(clause_expr);
    const SExpr* rule_at = nullptr;
    for (std::size_t i = 3; i < cmd.items.size(); i += 2) {
      const SExpr& key = cmd.items[i];
      if (key.kind != SExpr::Kind::Keyword) {
        parse_error("expected a step attribute", key);
      }
      if (i + 1 >= cmd.items.size()) parse_error("attribute without value", key);
      const SExpr& value = cmd.items[i + 1];
      if (key.text == ":rule") {
        step.rule = expect_symbol(value, "a rule name").text;
        rule_at = &value;
      } else if (key.text == ":premises") {
        expect_list(value, "a premise list");
        for (const SExpr& p : value.items) {
          expect_symbol(p, "a premise id");
          if (!ids_.count(p.text)) {
            throw Error(ErrorKind::UnknownPremise,
                        "unknown premise '" + p.text + "'", p.location);
          }
          step.premises.push_back(p.text);
        }
      } else if (key.text == ":args") {
        expect_list(value, "an argument list");
        step.args = parse_args(value, clause_expr);
      } else {
        parse_error("unknown step attribute '" + key.text + "'", key);
      }
    }
    if (!rule_at) parse_error("step without :rule", cmd);
    if (closes) {
      if (!options_.subproof_rules.count(step.rule)) {
        parse_error("rule '" + step.rule + "' cannot conclude a subproof",
                    *rule_at);
      }
      open_.pop_back();
      tp_.pop_anchor();
      reserved_.erase(step.id);
    }
    ids_.insert(step.id);
    emit(std::move(step));
  }

  std::vector<RuleArg> parse_args(const SExpr& list, const SExpr& clause_expr) {
    std::vector<RuleArg> args;
    auto parse_one = [&](const SExpr& item) {
      if (item.is_list() && !item.items.empty() &&
          item.items[0].is_keyword(":=")) {
        args.push_back(parse_assign(item, clause_expr));
        return;
      }
      Term t = tp_.parse(item);
      if (t.is_numeral()) {
        args.push_back(RationalArg{t.value()});
      } else {
        args.push_back(TermArg{t});
      }
    };
    if (!list.items.empty() && list.items[0].is_keyword(":=")) {
      parse_one(list);
    } else {
      for (const SExpr& item : list.items) parse_one(item);
    }
    return args;
  }

  // Resolves the variable of `(:= x t)` or `(:= (x S) t)`.
  Term assigned_variable(const SExpr& lhs, const SExpr& sort_source) {
    if (lhs.is_list()) {
      if (lhs.items.size() != 2 || !lhs.items[0].is_symbol()) {
        parse_error("expected (<symbol> <sort>)", lhs);
      }
      return tp_.terms().mk_variable(lhs.items[0].text,
                                     tp_.parse_sort(lhs.items[1]));
    }
    expect_symbol(lhs, "a variable");
    if (const SExpr* sort = find_binder_sort(sort_source, lhs.text)) {
      return tp_.terms().mk_variable(lhs.text, tp_.parse_sort(*sort));
    }
    if (auto known = tp_.context_variable(lhs.text)) return *known;
    throw Error(ErrorKind::UndeclaredSymbol,
                "cannot determine the sort of variable '" + lhs.text + "'",
                lhs.location);
  }

  AssignArg parse_assign(const SExpr& item, const SExpr& clause_expr) {
    if (item.items.size() != 3) parse_error("malformed assignment", item);
    Term var = assigned_variable(item.items[1], clause_expr);
    return AssignArg{var, tp_.parse(item.items[2])};
  }

  const SExpr& target_clause(const std::string& target) const {
    static const SExpr empty;
    for (std::size_t j = index_ + 1; j < top_.size(); ++j) {
      const SExpr& c = top_[j];
      if (c.is_list() && c.items.size() >= 3 && c.items[0].is_symbol("step") &&
          c.items[1].is_symbol(target)) {
        return c.items[2];
      }
    }
    return empty;
  }

  void parse_anchor(const SExpr& cmd) {
    Anchor anchor;
    const SExpr* args = nullptr;
    const SExpr* target = nullptr;
    for (std::size_t i = 1; i < cmd.items.size(); i += 2) {
      const SExpr& key = cmd.items[i];
      if (key.kind != SExpr::Kind::Keyword || i + 1 >= cmd.items.size()) {
        parse_error("expected :step or :args", key);
      }
      if (key.text == ":step") {
        target = &expect_symbol(cmd.items[i + 1], "a step id");
      } else if (key.text == ":args") {
        args = &expect_list(cmd.items[i + 1], "an anchor argument list");
      } else {
        parse_error("unknown anchor attribute '" + key.text + "'", key);
      }
    }
    if (!target) parse_error("anchor without :step", cmd);
    claim_id(*target);
    anchor.target_step = target->text;
    reserved_.insert(target->text);
    open_.push_back({target->text, cmd.location});
    tp_.push_anchor();

    const SExpr& sort_source = target_clause(target->text);
    auto parse_entry = [&](const SExpr& entry) {
      if (!entry.is_list()) parse_error("malformed anchor argument", entry);
      if (!entry.items.empty() && entry.items[0].is_keyword(":=")) {
        if (entry.items.size() != 3) parse_error("malformed assignment", entry);
        Term var = assigned_variable(entry.items[1], sort_source);
        tp_.add_anchor_variable(var);
        const SExpr& rhs = entry.items[2];
        Term value;
        if (rhs.is_symbol() && !tp_.lookup(rhs.text)) {
          value = tp_.terms().mk_variable(rhs.text, var.sort());
          tp_.add_anchor_variable(value);
        } else {
          value = tp_.parse(rhs);
        }
        if (!(value.sort() == var.sort())) {
          throw Error(ErrorKind::SortError,
                      "context assignment changes sort of '" + var.name() + "'",
                      rhs.location);
        }
        anchor.assignments.push_back({var, value});
        return;
      }
      if (entry.items.size() != 2 || !entry.items[0].is_symbol()) {
        parse_error("expected (<symbol> <sort>) or (:= ...)", entry);
      }
      Term var = tp_.terms().mk_variable(entry.items[0].text,
                                         tp_.parse_sort(entry.items[1]));
      tp_.add_anchor_variable(var);
      anchor.assignments.push_back({var, std::nullopt});
    };
    if (args) {
      if (!args->items.empty() && args->items[0].is_keyword(":=")) {
        parse_entry(*args);
      } else {
        for (const SExpr& entry : args->items) parse_entry(entry);
      }
    }
    emit(std::move(anchor));
  }

  const ParserOptions& options_;
  SignatureTable sig_;
  TermParser tp_;
  std::vector<SExpr> top_;
  std::size_t index_ = 0;
  std::vector<ProofCommand> commands_;
  std::vector<FunctionDefinition> pending_;
  std::unordered_set<std::string> ids_;
  std::unordered_set<std::string> reserved_;
  std::vector<OpenAnchor> open_;
};

}  // namespace

const std::string& command_id(const ProofCommand& command) {
  static const std::string none;
  if (auto* a = std::get_if<Assume>(&command)) return a->id;
  if (auto* s = std::get_if<Step>(&command)) return s->id;
  return none;
}

Problem parse_problem(std::string_view text) {
  Problem problem;
  TermParser tp(*problem.terms, problem.signature);
  tp.set_named_hook([&](const std::string& name, Term t, const SExpr& at) {
    define_checked(problem.signature, Definition{name, {}, t.sort(), t}, at);
    problem.named_terms[name] = t;
  });
  for (const SExpr& cmd : read_sexprs(text)) {
    if (!cmd.is_list() || cmd.items.empty() || !cmd.items[0].is_symbol()) {
      parse_error("expected a command", cmd);
    }
    const std::string& head = cmd.items[0].text;
    if (head == "set-logic") {
      if (cmd.items.size() != 2) parse_error("malformed set-logic", cmd);
      problem.logic = expect_symbol(cmd.items[1], "a logic name").text;
    } else if (head == "declare-sort") {
      if (cmd.items.size() != 3) parse_error("malformed declare-sort", cmd);
      const SExpr& name = expect_symbol(cmd.items[1], "a sort name");
      if (cmd.items[2].kind != SExpr::Kind::Numeral) {
        parse_error("expected a sort arity", cmd.items[2]);
      }
      if (cmd.items[2].text != "0") {
        throw Error(ErrorKind::UnsupportedCommand,
                    "parametric sorts are not supported", cmd.items[2].location);
      }
      try {
        problem.signature.declare_sort(name.text);
      } catch (const Error& err) {
        throw Error(err.kind(), err.message(), name.location);
      }
    } else if (head == "declare-fun") {
      if (cmd.items.size() != 4) parse_error("malformed declare-fun", cmd);
      const SExpr& name = expect_symbol(cmd.items[1], "a function name");
      FunctionDecl decl{name.text, {}, tp.parse_sort(cmd.items[3])};
      for (const SExpr& s : expect_list(cmd.items[2], "a sort list").items) {
        decl.domain.push_back(tp.parse_sort(s));
      }
      declare_checked(problem.signature, std::move(decl), name);
    } else if (head == "declare-const") {
      if (cmd.items.size() != 3) parse_error("malformed declare-const", cmd);
      const SExpr& name = expect_symbol(cmd.items[1], "a constant name");
      declare_checked(problem.signature,
                      FunctionDecl{name.text, {}, tp.parse_sort(cmd.items[2])},
                      name);
    } else if (head == "define-fun") {
      Definition def = parse_define_fun(cmd, tp);
      define_checked(problem.signature, std::move(def), cmd.items[1]);
    } else if (head == "assert") {
      if (cmd.items.size() != 2) parse_error("malformed assert", cmd);
      std::optional<std::string> name;
      const SExpr& body = cmd.items[1];
      if (body.is_list() && body.items.size() >= 4 &&
          body.items[0].is_symbol("!")) {
        for (std::size_t i = 2; i + 1 < body.items.size(); ++i) {
          if (body.items[i].is_keyword(":named") &&
              body.items[i + 1].is_symbol()) {
            name = body.items[i + 1].text;
          }
        }
      }
      problem.assertions.push_back({name, tp.parse_bool(body)});
    } else if (head == "check-sat" || head == "exit" || head == "set-info" ||
               head == "set-option") {
      continue;
    } else {
      throw Error(ErrorKind::UnsupportedCommand,
                  "unsupported command '" + head + "'", cmd.items[0].location);
    }
  }
  return problem;
}

std::vector<ProofCommand> parse_proof(std::string_view text,
                                      const Problem& problem,
                                      const ParserOptions& options) {
  return ProofParser(problem, options).run(text);
}

}  // namespace alethe
