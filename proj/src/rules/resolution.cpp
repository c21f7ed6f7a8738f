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
#include <algorithm>
#include <set>

#include "alethe/rules.hpp"

namespace alethe {

namespace {

constexpr std::size_t kMaxPremises = 16;
constexpr std::size_t kSearchBudget = 200000;

using LiteralSet = std::vector<Term>;

LiteralSet to_set(const Clause& c) {
  LiteralSet s(c.begin(), c.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool complementary(Term a, Term b) {
  return (a.is_not() && a.args()[0] == b) || (b.is_not() && b.args()[0] == a);
}

LiteralSet resolve(const LiteralSet& c, Term pivot_c, const LiteralSet& p,
                   Term pivot_p) {
  LiteralSet out;
  out.reserve(c.size() + p.size());
  auto ci = c.begin();
  auto pi = p.begin();
  while (ci != c.end() || pi != p.end()) {
    if (ci != c.end() && *ci == pivot_c) {
      ++ci;
      continue;
    }
    if (pi != p.end() && *pi == pivot_p) {
      ++pi;
      continue;
    }
    if (pi == p.end() || (ci != c.end() && *ci < *pi)) {
      out.push_back(*ci++);
    } else if (ci == c.end() || *pi < *ci) {
      out.push_back(*pi++);
    } else {
      out.push_back(*ci++);
      ++pi;
    }
  }
  return out;
}

// First clashing pair between c and p, in the order of c.
bool first_pivot(const LiteralSet& c, const LiteralSet& p, Term& in_c,
                 Term& in_p) {
  for (Term a : c) {
    for (Term b : p) {
      if (complementary(a, b)) {
        in_c = a;
        in_p = b;
        return true;
      }
    }
  }
  return false;
}

class ChainSearch {
 public:
  ChainSearch(std::vector<LiteralSet> premises, LiteralSet target)
      : premises_(std::move(premises)), target_(std::move(target)) {}

  bool greedy() const {
    std::vector<bool> used(premises_.size(), false);
    LiteralSet current = premises_[0];
    used[0] = true;
    for (std::size_t done = 1; done < premises_.size(); ++done) {
      bool progressed = false;
      for (std::size_t j = 1; j < premises_.size(); ++j) {
        Term a, b;
        if (used[j] || !first_pivot(current, premises_[j], a, b)) continue;
        current = resolve(current, a, premises_[j], b);
        used[j] = true;
        progressed = true;
        break;
      }
      if (!progressed) return false;
    }
    return current == target_;
  }

  // Returns nullopt when the budget is exhausted.
  std::optional<bool> exhaustive() {
    for (std::size_t start = 0; start < premises_.size(); ++start) {
      std::uint32_t mask = 1u << start;
      auto found = dfs(premises_[start], mask);
      if (!found || *found) return found;
    }
    return false;
  }

 private:
  // A literal outside the target can only disappear as a pivot against a
  // premise not used yet.
  bool removable(const LiteralSet& current, std::uint32_t mask) const {
    for (Term lit : current) {
      if (std::binary_search(target_.begin(), target_.end(), lit)) continue;
      bool can = false;
      for (std::size_t j = 0; j < premises_.size() && !can; ++j) {
        if (mask & (1u << j)) continue;
        for (Term b : premises_[j]) {
          if (complementary(lit, b)) {
            can = true;
            break;
          }
        }
      }
      if (!can) return false;
    }
    return true;
  }

  std::optional<bool> dfs(const LiteralSet& current, std::uint32_t mask) {
    std::uint32_t full = (1u << premises_.size()) - 1;
    if (mask == full) return current == target_;
    if (++expanded_ > kSearchBudget) return std::nullopt;
    if (!visited_.insert({mask, current}).second) return false;
    if (!removable(current, mask)) return false;
    for (std::size_t j = 0; j < premises_.size(); ++j) {
      if (mask & (1u << j)) continue;
      for (Term a : current) {
        for (Term b : premises_[j]) {
          if (!complementary(a, b)) continue;
          auto found =
              dfs(resolve(current, a, premises_[j], b), mask | (1u << j));
          if (!found || *found) return found;
        }
      }
    }
    return false;
  }

  std::vector<LiteralSet> premises_;
  LiteralSet target_;
  std::set<std::pair<std::uint32_t, LiteralSet>> visited_;
  std::size_t expanded_ = 0;
};

}  // namespace

Outcome check_resolution(std::span<const Clause> premises,
                         const Clause& conclusion) {
  if (premises.empty()) return Outcome::fail("resolution without premises");
  std::vector<LiteralSet> sets;
  sets.reserve(premises.size());
  for (const Clause& p : premises) sets.push_back(to_set(p));
  ChainSearch search(std::move(sets), to_set(conclusion));
  if (search.greedy()) return Outcome::ok();
  if (premises.size() > kMaxPremises) {
    return Outcome::fail("resolution too wide for search");
  }
  std::optional<bool> found = search.exhaustive();
  if (!found) return Outcome::fail("resolution too wide for search");
  if (*found) return Outcome::ok();
  return Outcome::fail("no resolution chain found");
}

}  // namespace alethe
