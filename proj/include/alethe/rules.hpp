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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alethe/proof.hpp"

namespace alethe {

// Variable fixings and `x := t` mappings introduced by one anchor.
struct Frame {
  std::vector<Term> fixed;
  std::vector<std::pair<Term, Term>> mappings;
};

// Stack of frames for the subproofs enclosing a step, outermost first.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Frame> frames) : frames_(std::move(frames)) {}

  void push(Frame frame) { frames_.push_back(std::move(frame)); }
  void pop() { frames_.pop_back(); }
  std::size_t depth() const { return frames_.size(); }
  std::span<const Frame> frames() const { return frames_; }

  // True if some frame maps `from := to`.
  bool maps(Term from, Term to) const;

 private:
  std::vector<Frame> frames_;
};

Frame frame_of(const Anchor& anchor);

// Result of a single rule check. `note` carries statistics-only remarks.
class Outcome {
 public:
  static Outcome ok(std::string note = {}) {
    return Outcome(true, {}, std::move(note));
  }
  static Outcome fail(std::string reason) {
    return Outcome(false, std::move(reason), {});
  }

  bool is_ok() const { return ok_; }
  explicit operator bool() const { return ok_; }
  const std::string& reason() const { return reason_; }
  const std::string& note() const { return note_; }

 private:
  Outcome(bool ok, std::string reason, std::string note)
      : ok_(ok), reason_(std::move(reason)), note_(std::move(note)) {}

  bool ok_;
  std::string reason_;
  std::string note_;
};

// Per-rule strictness levels. Absent entries mean the least strict level.
struct StrictnessConfig {
  std::map<std::string, int, std::less<>> levels;

  int level(std::string_view rule) const;
  static int least_strict(std::string_view rule);
};

// --- individual rules -----------------------------------------------------
//
// All terms are expected with definitions already expanded.

Outcome check_resolution(std::span<const Clause> premises,
                         const Clause& conclusion);

// Levels: 1 ordered and oriented, 2 ordered, 3 unordered.
Outcome check_trans(std::span<const Clause> premises, const Clause& conclusion,
                    int level);

Outcome check_cong(std::span<const Clause> premises, const Clause& conclusion,
                   const Context& ctx);
Outcome check_refl(const Clause& conclusion, const Context& ctx);
Outcome check_symm(std::span<const Clause> premises, const Clause& conclusion);

// `subproof` holds the conclusions of the steps directly inside the subproof.
Outcome check_bind(std::span<const Clause> subproof, const Anchor& anchor,
                   const Clause& conclusion);

Outcome check_equiv_pos1(const Clause& conclusion);
Outcome check_sko_ex(TermManager& tm, const Clause& conclusion,
                     const Context& ctx);
Outcome check_forall_inst(TermManager& tm, const Clause& conclusion,
                          std::span<const RuleArg> args);
Outcome check_la_generic(const Clause& conclusion,
                         std::span<const RuleArg> args);

// --- transitivity chains --------------------------------------------------

struct ChainLink {
  std::size_t premise;
  bool flipped;

  friend bool operator==(const ChainLink&, const ChainLink&) = default;
};

// Orders and orients `equalities` into a chain from `from` to `to`, using
// every equality exactly once. Greedy endpoint matching that backtracks over
// the first choice only; tried from `from` and then from `to`.
std::optional<std::vector<ChainLink>> find_trans_chain(
    std::span<const std::pair<Term, Term>> equalities, Term from, Term to);

// --- dispatch -------------------------------------------------------------

struct RuleInput {
  TermManager& terms;
  const Step& step;
  std::span<const Clause> premises;
  const Clause& conclusion;
  std::span<const RuleArg> args;
  const Context& context;
  const StrictnessConfig& strictness;
  // Set for steps that conclude a subproof.
  const Anchor* anchor = nullptr;
  std::span<const Clause> subproof;
};

using RuleChecker = std::function<Outcome(const RuleInput&)>;

class RuleRegistry {
 public:
  // Registry with every rule implemented by this library.
  static RuleRegistry standard();

  void add(std::string rule, RuleChecker checker);
  const RuleChecker* find(std::string_view rule) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, RuleChecker, std::less<>> rules_;
};

}  // namespace alethe
