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

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alethe/term.hpp"

namespace alethe::testing {

// --- propositional clauses over at most 4 atoms ---------------------------

// Literal i > 0 is atom i-1, i < 0 its negation.
using IntClause = std::vector<int>;

// Bit a of the mask is set iff the clause is true under assignment a, where
// bit k of a is the value of atom k.
inline std::uint32_t truth_mask(const IntClause& clause, int atoms) {
  std::uint32_t mask = 0;
  for (int a = 0; a < (1 << atoms); ++a) {
    for (int lit : clause) {
      int atom = (lit > 0 ? lit : -lit) - 1;
      bool value = (a >> atom) & 1;
      if (value == (lit > 0)) {
        mask |= 1u << a;
        break;
      }
    }
  }
  return mask;
}

inline bool entails(const std::vector<IntClause>& premises,
                    const IntClause& conclusion, int atoms) {
  std::uint32_t all = (1u << (1 << atoms)) - 1;
  std::uint32_t models = all;
  for (const IntClause& p : premises) models &= truth_mask(p, atoms);
  return (models & ~truth_mask(conclusion, atoms) & all) == 0;
}

// --- Farkas combinations ----------------------------------------------------

enum class Rel { Less, LessEq, Equal };

// coeffs . vars + constant  rel  0
struct Constraint {
  std::vector<mpq_class> coeffs;
  mpq_class constant;
  Rel rel;
};

// Whether the weighted sum of the constraints is a contradiction 0 rel k.
inline bool farkas_absurd(const std::vector<Constraint>& cs,
                          const std::vector<mpq_class>& weights) {
  if (cs.empty() || cs.size() != weights.size()) return false;
  std::size_t n = cs[0].coeffs.size();
  std::vector<mpq_class> sum(n, 0);
  mpq_class constant = 0;
  bool nonzero = false, strict = false, equalities_only = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const mpq_class& w = weights[i];
    if (w < 0 && cs[i].rel != Rel::Equal) return false;
    if (w == 0) continue;
    nonzero = true;
    strict = strict || cs[i].rel == Rel::Less;
    equalities_only = equalities_only && cs[i].rel == Rel::Equal;
    for (std::size_t j = 0; j < n; ++j) sum[j] += w * cs[i].coeffs[j];
    constant += w * cs[i].constant;
  }
  if (!nonzero) return false;
  for (const mpq_class& s : sum) {
    if (s != 0) return false;
  }
  if (equalities_only) return constant != 0;
  return strict ? constant >= 0 : constant > 0;
}

// --- alpha equivalence via de Bruijn indices --------------------------------

namespace detail {
// Free occurrences of `var` print as `replacement` when it is given.
inline void de_bruijn(Term t, std::vector<Term>& scope, std::string& out,
                      Term var = {}, const std::string* replacement = nullptr) {
  switch (t.kind()) {
    case TermKind::Variable:
      for (std::size_t i = scope.size(); i-- > 0;) {
        if (scope[i] == t) {
          out += "#" + std::to_string(scope.size() - 1 - i);
          return;
        }
      }
      if (replacement && t == var) {
        out += *replacement;
        return;
      }
      out += "v:" + t.name() + ":" + t.sort().to_string();
      return;
    case TermKind::Constant:
      out += to_string(t) + ":" + t.sort().to_string();
      return;
    case TermKind::Application:
      out += "(" + t.name();
      for (Term a : t.args()) {
        out += ' ';
        de_bruijn(a, scope, out, var, replacement);
      }
      out += ")";
      return;
    case TermKind::Binder:
      out += "(" + std::string(to_string(t.binder())) + " [";
      for (Term v : t.bound()) {
        out += v.sort().to_string() + ";";
        scope.push_back(v);
      }
      out += "] ";
      de_bruijn(t.body(), scope, out, var, replacement);
      scope.resize(scope.size() - t.bound().size());
      out += ")";
      return;
  }
}
}  // namespace detail

inline std::string de_bruijn(Term t) {
  std::vector<Term> scope;
  std::string out;
  detail::de_bruijn(t, scope, out);
  return out;
}

// de Bruijn form of t with the free occurrences of `var` replaced by the
// closed term `closed`.
inline std::string de_bruijn_replacing(Term t, Term var, Term closed) {
  std::string replacement = de_bruijn(closed);
  std::vector<Term> scope;
  std::string out;
  detail::de_bruijn(t, scope, out, var, &replacement);
  return out;
}

// --- ground congruence closure ------------------------------------------------

// Union-find over ground terms with congruence propagation. Quadratic, for
// small test instances only.
class CongruenceClosure {
 public:
  void merge(Term a, Term b) {
    add(a);
    add(b);
    unite(a, b);
    propagate();
  }
  bool equal(Term a, Term b) {
    add(a);
    add(b);
    propagate();
    return find(a) == find(b);
  }

 private:
  void add(Term t) {
    if (parent_.count(t)) return;
    parent_[t] = t;
    terms_.push_back(t);
    if (t.is_application()) {
      for (Term a : t.args()) add(a);
    }
  }
  Term find(Term t) {
    while (!(parent_.at(t) == t)) t = parent_.at(t);
    return t;
  }
  bool unite(Term a, Term b) {
    Term ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent_[ra] = rb;
    return true;
  }
  void propagate() {
    for (bool changed = true; changed;) {
      changed = false;
      for (Term s : terms_) {
        for (Term t : terms_) {
          if (!s.is_application() || !t.is_application() ||
              s.name() != t.name() || s.args().size() != t.args().size() ||
              find(s) == find(t)) {
            continue;
          }
          bool congruent = true;
          for (std::size_t i = 0; i < s.args().size() && congruent; ++i) {
            congruent = find(s.args()[i]) == find(t.args()[i]);
          }
          if (congruent) changed |= unite(s, t);
        }
      }
    }
  }

  std::map<Term, Term> parent_;
  std::vector<Term> terms_;
};

}  // namespace alethe::testing
