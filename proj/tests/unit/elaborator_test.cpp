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
#include "alethe/elaborator.hpp"
#include "alethe/error.hpp"
#include "alethe/parser.hpp"
#include "alethe/printer.hpp"
#include "doctest.h"
#include "support/corpus.hpp"

namespace alethe {
namespace {

using testing::corpus_path;
using testing::read_text;

struct Chain {
  TermManager tm;
  Sort u = Sort::uninterpreted("U");
  Term a = tm.mk_constant("a", u), b = tm.mk_constant("b", u),
       c = tm.mk_constant("c", u), d = tm.mk_constant("d", u);

  Step step(Term l, Term r, std::vector<std::string> premises) {
    return Step{"t9", {tm.mk_eq(l, r)}, "trans", std::move(premises), {}};
  }
  Clause eq(Term l, Term r) { return {tm.mk_eq(l, r)}; }
};

TEST_CASE("elaborate_trans examples") {
  Chain ch;
  std::vector<Clause> reversed = {ch.eq(ch.b, ch.a), ch.eq(ch.c, ch.b),
                                  ch.eq(ch.d, ch.c)};
  auto out = elaborate_trans(ch.tm, ch.step(ch.d, ch.a, {"p1", "p2", "p3"}),
                             reversed);
  REQUIRE(out.size() == 1);
  CHECK(out[0].premises == std::vector<std::string>{"p3", "p2", "p1"});

  std::vector<Clause> ordered = {ch.eq(ch.a, ch.b), ch.eq(ch.b, ch.c)};
  Step s = ch.step(ch.a, ch.c, {"p1", "p2"});
  out = elaborate_trans(ch.tm, s, ordered);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == s);

  std::vector<Clause> mixed = {ch.eq(ch.c, ch.b), ch.eq(ch.b, ch.a),
                               ch.eq(ch.d, ch.c)};
  out = elaborate_trans(ch.tm, ch.step(ch.d, ch.a, {"p1", "p2", "p3"}), mixed);
  REQUIRE(out.size() == 1);
  CHECK(out[0].premises == std::vector<std::string>{"p3", "p1", "p2"});
  std::vector<Clause> resolved = {mixed[2], mixed[0], mixed[1]};
  CHECK(check_trans(resolved, out[0].clause, 1));

  std::vector<Clause> flipped = {ch.eq(ch.b, ch.a), ch.eq(ch.c, ch.b)};
  out = elaborate_trans(ch.tm, ch.step(ch.a, ch.c, {"p1", "p2"}), flipped);
  REQUIRE(out.size() == 3);
  CHECK(out[0].id == "t9.s1");
  CHECK(out[0].rule == "symm");
  CHECK(out[0].clause == ch.eq(ch.a, ch.b));
  CHECK(out[0].premises == std::vector<std::string>{"p1"});
  CHECK(out[1].id == "t9.s2");
  CHECK(out[2].premises == std::vector<std::string>{"t9.s1", "t9.s2"});
}

TEST_CASE("elaborate_trans failures") {
  Chain ch;
  std::vector<Clause> premises = {ch.eq(ch.a, ch.b)};
  try {
    elaborate_trans(ch.tm, ch.step(ch.a, ch.c, {"p1"}), premises);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unelaborable);
  }
  std::vector<Clause> flipped = {ch.eq(ch.b, ch.a)};
  try {
    elaborate_trans(ch.tm, ch.step(ch.a, ch.b, {"p1"}), flipped, nullptr,
                    [](const std::string&) { return true; });
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Internal);
  }
}

TEST_CASE("elaborate_proof") {
  Problem frag = parse_problem(read_text(corpus_path("fragment.smt2")));
  auto cmds = parse_proof(read_text(corpus_path("fragment.alethe")), frag);
  StrictnessConfig strict;
  strict.levels["trans"] = 1;
  ElaborationResult r = elaborate_proof(frag, cmds, strict);
  CHECK(r.commands == cmds);
  CHECK(r.inserted == 0);
  CHECK(elaborate_proof(frag, {}, strict).commands.empty());

  Problem p = parse_problem(read_text(corpus_path("trans.smt2")));
  cmds = parse_proof(read_text(corpus_path("trans.alethe")), p);
  CHECK(check_proof(p, cmds, strict).verdict == Verdict::Invalid);
  r = elaborate_proof(p, cmds, strict);
  CHECK(r.unelaborable.empty());
  CHECK(r.rewritten == 3);
  CHECK(r.inserted == 4);
  CHECK(check_proof(p, r.commands, strict).verdict == Verdict::Valid);
  // Conclusions of rewritten steps are unchanged.
  for (const auto& c : cmds) {
    const auto* s = std::get_if<Step>(&c);
    if (!s) continue;
    bool found = false;
    for (const auto& e : r.commands) {
      const auto* t = std::get_if<Step>(&e);
      if (t && t->id == s->id) {
        found = true;
        CHECK(t->clause == s->clause);
      }
    }
    CHECK(found);
  }
  // The output reparses.
  CHECK(parse_proof(print_proof(r.commands), p) == r.commands);
}

TEST_CASE("unelaborable steps are collected") {
  Problem p = parse_problem(read_text(corpus_path("trans.smt2")));
  auto cmds = parse_proof(
      "(assume a0 (= b a))(step t1 (cl (= a c)) :rule trans :premises (a0))",
      p);
  StrictnessConfig strict;
  strict.levels["trans"] = 1;
  ElaborationResult r = elaborate_proof(p, cmds, strict);
  CHECK(r.unelaborable == std::vector<std::string>{"t1"});
  CHECK(r.commands == cmds);
}

TEST_CASE("prune examples") {
  Problem p = parse_problem(read_text(corpus_path("fragment.smt2")));
  std::string text = read_text(corpus_path("fragment.alethe"));
  auto cmds = parse_proof(text, p);
  CHECK(prune(cmds, std::string("t6")) == cmds);

  auto extended = parse_proof(text + "(step x1 (cl (= X X)) :rule refl)\n", p);
  REQUIRE(extended.size() == 12);
  auto pruned = prune(extended, std::string("t6"));
  CHECK(pruned.size() == 11);
  CHECK(pruned == cmds);
  CHECK(prune(pruned, std::string("t6")) == pruned);

  auto only_t3 = prune(cmds, std::string("t3"));
  CHECK(only_t3.size() == 7);
  for (const auto& c : only_t3) {
    CHECK(!std::holds_alternative<FunctionDefinition>(c));
  }

  CHECK_THROWS_AS(prune(cmds, std::nullopt), Error);
  CHECK_THROWS_AS(prune(cmds, std::string("t42")), Error);
  CHECK_THROWS_AS(prune({}, std::string("t6")), Error);
}

TEST_CASE("prune detects the empty clause") {
  Problem p = parse_problem(read_text(corpus_path("arith.smt2")));
  auto cmds = parse_proof(read_text(corpus_path("arith.alethe")), p);
  auto pruned = prune(cmds, std::nullopt);
  CHECK(pruned.size() == 7);
  CHECK(check_proof(p, pruned, StrictnessConfig{}).verdict == Verdict::Valid);
}

}  // namespace
}  // namespace alethe
