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
#include "alethe/term.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "alethe/error.hpp"

namespace alethe {

std::string_view to_string(BinderKind kind) {
  switch (kind) {
    case BinderKind::Forall: return "forall";
    case BinderKind::Exists: return "exists";
    case BinderKind::Choice: return "choice";
  }
  return "?";
}

// --- Term accessors -------------------------------------------------------

std::uint64_t Term::id() const { return node_->id; }
TermKind Term::kind() const { return node_->kind; }
const Sort& Term::sort() const { return node_->sort; }
const std::string& Term::name() const { return node_->name; }
bool Term::is_numeral() const { return node_->value.has_value(); }
const mpq_class& Term::value() const { return *node_->value; }
BinderKind Term::binder() const { return node_->binder; }

std::span<const Term> Term::args() const {
  if (node_->kind != TermKind::Application) return {};
  return node_->children;
}

std::span<const Term> Term::bound() const {
  if (node_->kind != TermKind::Binder) return {};
  return std::span<const Term>(node_->children)
      .first(node_->children.size() - 1);
}

Term Term::body() const {
  if (node_->kind != TermKind::Binder) return {};
  return node_->children.back();
}

std::span<const Term> Term::free_variables() const { return node_->free_vars; }

bool Term::is_app(std::string_view fn) const {
  return node_ && node_->kind == TermKind::Application && node_->name == fn;
}

std::strong_ordering operator<=>(Term a, Term b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  return a.node_->id <=> b.node_->id;
}

// --- TermManager ----------------------------------------------------------

struct TermManager::Impl {
  mutable std::mutex mutex;
  std::deque<detail::TermNode> nodes;
  std::unordered_map<std::string, const detail::TermNode*> table;
  std::unordered_set<std::string> used_names;
  std::uint64_t fresh_counter = 0;
};

TermManager::TermManager() : impl_(std::make_unique<Impl>()) {}
TermManager::~TermManager() = default;

namespace {

std::string intern_key(const detail::TermNode& n) {
  std::string key;
  key += static_cast<char>('0' + static_cast<int>(n.kind));
  key += static_cast<char>('0' + static_cast<int>(n.binder));
  key += n.name;
  key += '\x1f';
  key += n.sort.to_string();
  key += '\x1f';
  if (n.value) key += n.value->get_str();
  for (Term c : n.children) {
    key += '\x1f';
    key += std::to_string(c.id());
  }
  return key;
}

void merge_free_vars(std::vector<Term>& into, std::span<const Term> from) {
  std::vector<Term> merged;
  merged.reserve(into.size() + from.size());
  std::set_union(into.begin(), into.end(), from.begin(), from.end(),
                 std::back_inserter(merged));
  into = std::move(merged);
}

}  // namespace

Term TermManager::intern(detail::TermNode node) {
  std::string key = intern_key(node);
  std::lock_guard lock(impl_->mutex);
  if (auto it = impl_->table.find(key); it != impl_->table.end()) {
    return Term(it->second);
  }
  node.id = impl_->nodes.size();
  if (!node.name.empty()) impl_->used_names.insert(node.name);
  impl_->nodes.push_back(std::move(node));
  detail::TermNode& stored = impl_->nodes.back();
  Term self(&stored);
  switch (stored.kind) {
    case TermKind::Variable:
      stored.free_vars.push_back(self);
      break;
    case TermKind::Constant:
      break;
    case TermKind::Application:
      for (Term a : stored.children) merge_free_vars(stored.free_vars,
                                                     a.free_variables());
      break;
    case TermKind::Binder: {
      std::vector<Term> fv(stored.children.back().free_variables().begin(),
                           stored.children.back().free_variables().end());
      std::span<const Term> bound =
          std::span<const Term>(stored.children).first(stored.children.size() -
                                                       1);
      std::erase_if(fv, [&](Term v) {
        return std::find(bound.begin(), bound.end(), v) != bound.end();
      });
      stored.free_vars = std::move(fv);
      break;
    }
  }
  impl_->table.emplace(std::move(key), &stored);
  return self;
}

Term TermManager::mk_variable(std::string name, Sort sort) {
  if (sort.kind() == SortKind::Function) {
    throw Error(ErrorKind::SortError, "variable '" + name + "' of function sort");
  }
  detail::TermNode n;
  n.kind = TermKind::Variable;
  n.name = std::move(name);
  n.sort = std::move(sort);
  return intern(std::move(n));
}

Term TermManager::mk_constant(std::string symbol, Sort sort) {
  detail::TermNode n;
  n.kind = TermKind::Constant;
  n.name = std::move(symbol);
  n.sort = std::move(sort);
  return intern(std::move(n));
}

Term TermManager::mk_numeral(mpq_class value, Sort sort) {
  value.canonicalize();
  if (sort.kind() == SortKind::Int && value.get_den() != 1) {
    throw Error(ErrorKind::SortError,
                "non-integral Int literal " + value.get_str());
  }
  if (!sort.is_numeric()) {
    throw Error(ErrorKind::SortError, "numeral of sort " + sort.to_string());
  }
  detail::TermNode n;
  n.kind = TermKind::Constant;
  n.value = std::move(value);
  n.sort = std::move(sort);
  return intern(std::move(n));
}

Term TermManager::mk_bool(bool value) {
  return mk_constant(value ? "true" : "false", Sort::boolean());
}

Term TermManager::mk_application(std::string fn, std::vector<Term> args,
                                 Sort sort) {
  if (args.empty()) return mk_constant(std::move(fn), std::move(sort));
  detail::TermNode n;
  n.kind = TermKind::Application;
  n.name = std::move(fn);
  n.children = std::move(args);
  n.sort = std::move(sort);
  return intern(std::move(n));
}

Term TermManager::mk_binder(BinderKind kind, std::vector<Term> bound,
                            Term body) {
  if (bound.empty()) {
    throw Error(ErrorKind::SortError, "binder without bound variables");
  }
  for (Term v : bound) {
    if (v.is_null() || !v.is_variable()) {
      throw Error(ErrorKind::SortError, "binder over a non-variable");
    }
  }
  detail::TermNode n;
  n.kind = TermKind::Binder;
  n.binder = kind;
  if (kind == BinderKind::Choice) {
    if (bound.size() != 1) {
      throw Error(ErrorKind::SortError,
                  "choice must bind exactly one variable");
    }
    if (!body.sort().is_bool()) {
      throw Error(ErrorKind::SortError, "choice body is not Bool");
    }
    n.sort = bound.front().sort();
  } else {
    if (!body.sort().is_bool()) {
      throw Error(ErrorKind::SortError,
                  std::string(to_string(kind)) + " body is not Bool");
    }
    n.sort = Sort::boolean();
  }
  n.children = std::move(bound);
  n.children.push_back(body);
  return intern(std::move(n));
}

Term TermManager::mk_not(Term t) {
  if (!t.sort().is_bool()) {
    throw Error(ErrorKind::SortError, "not applied to non-Bool term");
  }
  return mk_application("not", {t}, Sort::boolean());
}

Term TermManager::mk_eq(Term lhs, Term rhs) {
  bool compatible = lhs.sort() == rhs.sort() ||
                    (lhs.sort().is_numeric() && rhs.sort().is_numeric());
  if (!compatible) {
    throw Error(ErrorKind::SortError, "equality between " +
                                          lhs.sort().to_string() + " and " +
                                          rhs.sort().to_string());
  }
  return mk_application("=", {lhs, rhs}, Sort::boolean());
}

std::string TermManager::fresh_name(std::string_view base) {
  std::lock_guard lock(impl_->mutex);
  for (;;) {
    std::string candidate =
        std::string(base) + std::to_string(++impl_->fresh_counter);
    if (impl_->used_names.insert(candidate).second) return candidate;
  }
}

void TermManager::reserve_name(std::string_view name) {
  std::lock_guard lock(impl_->mutex);
  impl_->used_names.emplace(name);
}

std::size_t TermManager::size() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->nodes.size();
}

// --- substitution ---------------------------------------------------------

namespace {

class Substituter {
 public:
  Substituter(TermManager& tm, const Substitution& sigma)
      : tm_(tm), sigma_(sigma) {}

  Term apply(Term t) {
    if (!touches(t)) return t;
    if (auto it = cache_.find(t); it != cache_.end()) return it->second;
    Term result;
    switch (t.kind()) {
      case TermKind::Variable:
        result = sigma_.at(t);
        break;
      case TermKind::Constant:
        result = t;
        break;
      case TermKind::Application: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (Term a : t.args()) args.push_back(apply(a));
        result = tm_.mk_application(t.name(), std::move(args), t.sort());
        break;
      }
      case TermKind::Binder:
        result = apply_binder(t);
        break;
    }
    cache_.emplace(t, result);
    return result;
  }

 private:
  bool touches(Term t) const {
    for (Term v : t.free_variables()) {
      if (sigma_.count(v)) return true;
    }
    return false;
  }

  Term apply_binder(Term t) {
    // Only mappings for variables free in t matter below this binder; bound
    // variables are never free in t, so they are excluded automatically.
    Substitution inner;
    std::vector<Term> range_fv;
    for (Term v : t.free_variables()) {
      auto it = sigma_.find(v);
      if (it == sigma_.end()) continue;
      inner.emplace(v, it->second);
      merge_free_vars(range_fv, it->second.free_variables());
    }
    std::vector<Term> bound;
    for (Term y : t.bound()) {
      if (std::binary_search(range_fv.begin(), range_fv.end(), y)) {
        Term renamed = tm_.mk_variable(tm_.fresh_name(y.name()), y.sort());
        inner[y] = renamed;
        bound.push_back(renamed);
      } else {
        bound.push_back(y);
      }
    }
    Term body = Substituter(tm_, inner).apply(t.body());
    return tm_.mk_binder(t.binder(), std::move(bound), body);
  }

  TermManager& tm_;
  const Substitution& sigma_;
  std::unordered_map<Term, Term> cache_;
};

}  // namespace

Term substitute(TermManager& tm, Term t, const Substitution& sigma) {
  for (const auto& [var, value] : sigma) {
    if (!var.is_variable()) {
      throw Error(ErrorKind::SortError,
                  "substitution domain contains non-variable " + to_string(var));
    }
    if (!(var.sort() == value.sort())) {
      throw Error(ErrorKind::SortError,
                  "substitution maps " + var.name() + " : " +
                      var.sort().to_string() + " to a term of sort " +
                      value.sort().to_string());
    }
  }
  if (sigma.empty()) return t;
  return Substituter(tm, sigma).apply(t);
}

// --- alpha equivalence ----------------------------------------------------

namespace {

using BindingEnv = std::vector<std::pair<Term, Term>>;

bool alpha_rec(Term t, Term u, BindingEnv& env) {
  if (t == u && (env.empty() || t.free_variables().empty())) return true;
  if (t.kind() != u.kind() || !(t.sort() == u.sort())) return false;
  switch (t.kind()) {
    case TermKind::Variable:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == t || it->second == u) {
          return it->first == t && it->second == u;
        }
      }
      return t == u;
    case TermKind::Constant:
      return t == u;
    case TermKind::Application: {
      if (t.name() != u.name() || t.args().size() != u.args().size()) {
        return false;
      }
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (!alpha_rec(t.args()[i], u.args()[i], env)) return false;
      }
      return true;
    }
    case TermKind::Binder: {
      if (t.binder() != u.binder() || t.bound().size() != u.bound().size()) {
        return false;
      }
      std::size_t mark = env.size();
      for (std::size_t i = 0; i < t.bound().size(); ++i) {
        if (!(t.bound()[i].sort() == u.bound()[i].sort())) return false;
      }
      for (std::size_t i = 0; i < t.bound().size(); ++i) {
        env.emplace_back(t.bound()[i], u.bound()[i]);
      }
      bool same = alpha_rec(t.body(), u.body(), env);
      env.resize(mark);
      return same;
    }
  }
  return false;
}

}  // namespace

bool alpha_equal(Term t, Term u) {
  if (t == u) return true;
  BindingEnv env;
  return alpha_rec(t, u, env);
}

std::vector<Term> free_variables(Term t) {
  return {t.free_variables().begin(), t.free_variables().end()};
}

bool binds_name(Term t, std::string_view name) {
  switch (t.kind()) {
    case TermKind::Variable:
    case TermKind::Constant:
      return false;
    case TermKind::Application:
      return std::any_of(t.args().begin(), t.args().end(),
                         [&](Term a) { return binds_name(a, name); });
    case TermKind::Binder:
      for (Term v : t.bound()) {
        if (v.name() == name) return true;
      }
      return binds_name(t.body(), name);
  }
  return false;
}

// --- printing -------------------------------------------------------------

namespace {

bool is_simple_symbol_char(char c) {
  if (c >= 'a' && c <= 'z') return true;
  if (c >= 'A' && c <= 'Z') return true;
  if (c >= '0' && c <= '9') return true;
  return std::string_view("~!@$%^&*_-+=<>.?/").find(c) !=
         std::string_view::npos;
}

std::string sort_text(const Sort& s) {
  return s.kind() == SortKind::Uninterpreted ? quote_symbol(s.name())
                                             : s.to_string();
}

void print(Term t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Variable:
      out += quote_symbol(t.name());
      return;
    case TermKind::Constant:
      if (t.is_numeral()) {
        out += format_rational(t.value(), t.sort().kind() == SortKind::Real);
      } else {
        out += quote_symbol(t.name());
      }
      return;
    case TermKind::Application:
      out += '(';
      out += quote_symbol(t.name());
      for (Term a : t.args()) {
        out += ' ';
        print(a, out);
      }
      out += ')';
      return;
    case TermKind::Binder:
      out += '(';
      out += to_string(t.binder());
      out += " (";
      for (std::size_t i = 0; i < t.bound().size(); ++i) {
        if (i) out += ' ';
        out += '(' + quote_symbol(t.bound()[i].name()) + ' ' +
               sort_text(t.bound()[i].sort()) + ')';
      }
      out += ") ";
      print(t.body(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string quote_symbol(std::string_view symbol) {
  bool simple = !symbol.empty() && !(symbol[0] >= '0' && symbol[0] <= '9') &&
                std::all_of(symbol.begin(), symbol.end(), is_simple_symbol_char);
  if (simple) return std::string(symbol);
  return "|" + std::string(symbol) + "|";
}

std::string format_rational(const mpq_class& value, bool as_real) {
  if (sgn(value) < 0) {
    return "(- " + format_rational(-value, as_real) + ")";
  }
  if (value.get_den() == 1) {
    return value.get_num().get_str() + (as_real ? ".0" : "");
  }
  return "(/ " + value.get_num().get_str() + " " + value.get_den().get_str() +
         ")";
}

std::string to_string(Term t) {
  if (t.is_null()) return "<null>";
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const Clause& clause) {
  std::string out = "(cl";
  for (Term t : clause) {
    out += ' ';
    print(t, out);
  }
  return out + ")";
}

}  // namespace alethe
