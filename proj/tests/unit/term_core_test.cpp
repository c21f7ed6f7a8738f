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
#include <random>
#include <thread>

#include "alethe/error.hpp"
#include "alethe/signature.hpp"
#include "alethe/term.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

namespace alethe {
namespace {

using testing::de_bruijn;

struct Fixture {
  TermManager tm;
  Sort a = Sort::uninterpreted("A");
  SignatureTable sig;

  Fixture() {
    sig.declare_sort("A");
    sig.declare_function({"f", {a}, a});
    sig.declare_function({"p", {a}, Sort::boolean()});
    sig.declare_function({"q", {a, a}, Sort::boolean()});
  }
  Term var(const std::string& n) { return tm.mk_variable(n, a); }
  Term f(Term t) { return apply(tm, sig, "f", {t}); }
  Term p(Term t) { return apply(tm, sig, "p", {t}); }
  Term q(Term t, Term u) { return apply(tm, sig, "q", {t, u}); }
};

TEST_CASE("interning yields identical handles") {
  Fixture fx;
  Term x = fx.var("x");
  Term t1 = fx.f(x);
  Term t2 = fx.f(fx.var("x"));
  CHECK(t1 == t2);
  CHECK(t1.id() == t2.id());
  CHECK(t1.sort() == fx.a);
  CHECK(!(fx.tm.mk_variable("x", Sort::integer()) == x));
}

TEST_CASE("application sort errors") {
  Fixture fx;
  Term b = fx.tm.mk_variable("b", Sort::boolean());
  CHECK_THROWS_AS(fx.f(b), Error);
  try {
    fx.f(b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SortError);
  }
  CHECK_THROWS_AS(apply(fx.tm, fx.sig, "g", {fx.var("x")}), Error);
}

TEST_CASE("term construction checks") {
  TermManager tm;
  CHECK_THROWS_AS(tm.mk_numeral(mpq_class(1, 2), Sort::integer()), Error);
  Term n = tm.mk_numeral(mpq_class(3, 2), Sort::real());
  CHECK(n.is_numeral());
  CHECK(n.value() == mpq_class(3, 2));
  Term x = tm.mk_variable("x", Sort::integer());
  CHECK_THROWS_AS(tm.mk_binder(BinderKind::Forall, {x}, x), Error);
  Term y = tm.mk_variable("y", Sort::integer());
  Term t = tm.mk_eq(x, y);
  CHECK_THROWS_AS(tm.mk_binder(BinderKind::Choice, {x, y}, t), Error);
  Term c = tm.mk_binder(BinderKind::Choice, {x}, t);
  CHECK(c.sort() == Sort::integer());
}

TEST_CASE("substitute examples") {
  Fixture fx;
  Term x = fx.var("x"), vr = fx.var("vr"), y = fx.var("y");
  CHECK(substitute(fx.tm, fx.f(x), {{x, vr}}) == fx.f(vr));

  Term forall = fx.tm.mk_binder(BinderKind::Forall, {x}, fx.p(x));
  Term t = fx.tm.mk_constant("t", fx.a);
  CHECK(substitute(fx.tm, forall, {{x, t}}) == forall);

  Term ex = fx.tm.mk_binder(BinderKind::Exists, {y}, fx.q(x, y));
  Term out = substitute(fx.tm, ex, {{x, y}});
  REQUIRE(out.is_binder());
  Term renamed = out.bound()[0];
  CHECK(!(renamed == y));
  CHECK(out.body() == fx.q(y, renamed));
  // Oracle: the result is exists z. q(y, z) with y free.
  Term z = fx.var("z");
  Term expected = fx.tm.mk_binder(BinderKind::Exists, {z}, fx.q(y, z));
  CHECK(de_bruijn(out) == de_bruijn(expected));

  Term i = fx.tm.mk_variable("i", Sort::integer());
  CHECK_THROWS_AS(substitute(fx.tm, fx.f(x), {{x, i}}), Error);
}

TEST_CASE("alpha_equal examples") {
  Fixture fx;
  Term x = fx.var("x"), vr = fx.var("vr"), y = fx.var("y");
  Term e1 = fx.tm.mk_binder(BinderKind::Exists, {x}, fx.p(fx.f(x)));
  Term e2 = fx.tm.mk_binder(BinderKind::Exists, {vr}, fx.p(fx.f(vr)));
  CHECK(alpha_equal(e1, e2));
  CHECK(alpha_equal(e1, e1));
  Term a1 = fx.tm.mk_binder(BinderKind::Forall, {x, y}, fx.q(x, y));
  Term a2 = fx.tm.mk_binder(BinderKind::Forall, {y, x}, fx.q(x, y));
  CHECK(!alpha_equal(a1, a2));
  CHECK(de_bruijn(a1) != de_bruijn(a2));
  // Free variables are not renamable.
  CHECK(!alpha_equal(fx.p(x), fx.p(y)));
}

TEST_CASE("free_variables examples") {
  Fixture fx;
  Term x = fx.var("x"), vr = fx.var("vr");
  CHECK(free_variables(fx.tm.mk_binder(BinderKind::Exists, {x}, fx.p(x)))
            .empty());
  CHECK(free_variables(fx.f(x)) == std::vector<Term>{x});
  Term choice = fx.tm.mk_binder(BinderKind::Choice, {vr}, fx.p(vr));
  CHECK(free_variables(choice).empty());
  CHECK(free_variables(fx.q(x, choice)) == std::vector<Term>{x});
}

TEST_CASE("fresh names are unused") {
  TermManager tm;
  Sort a = Sort::uninterpreted("A");
  tm.mk_variable("x1", a);
  std::string n1 = tm.fresh_name("x");
  std::string n2 = tm.fresh_name("x");
  CHECK(n1 != "x1");
  CHECK(n1 != n2);
}

TEST_CASE("format_rational") {
  CHECK(format_rational(mpq_class(3), false) == "3");
  CHECK(format_rational(mpq_class(3), true) == "3.0");
  CHECK(format_rational(mpq_class(-3, 2), false) == "(- (/ 3 2))");
  CHECK(format_rational(mpq_class(3, 2), true) == "(/ 3 2)");
}

// --- random terms -----------------------------------------------------------

class Generator {
 public:
  Generator(Fixture& fx, unsigned seed) : fx_(fx), rng_(seed) {
    for (const char* n : {"x", "y", "z", "w"}) vars_.push_back(fx.var(n));
  }

  Term boolean(int depth) {
    int pick = pick_int(0, depth > 0 ? 4 : 1);
    switch (pick) {
      case 0: return fx_.p(individual(depth - 1));
      case 1: return fx_.q(individual(depth - 1), individual(depth - 1));
      case 2: return fx_.tm.mk_not(boolean(depth - 1));
      case 3: return binder(BinderKind::Forall, depth);
      default: return binder(BinderKind::Exists, depth);
    }
  }

  Term individual(int depth) {
    int pick = pick_int(0, depth > 0 ? 3 : 1);
    switch (pick) {
      case 0: return vars_[pick_int(0, 3)];
      case 1: return fx_.tm.mk_constant("c", fx_.a);
      case 2: return fx_.f(individual(depth - 1));
      default: {
        Term v = vars_[pick_int(0, 3)];
        return fx_.tm.mk_binder(BinderKind::Choice, {v}, boolean(depth - 1));
      }
    }
  }

  // Renames the bound variables of every binder to fresh ones.
  Term alpha_variant(Term t) {
    switch (t.kind()) {
      case TermKind::Variable:
      case TermKind::Constant:
        return t;
      case TermKind::Application: {
        std::vector<Term> args;
        for (Term a : t.args()) args.push_back(alpha_variant(a));
        return fx_.tm.mk_application(t.name(), std::move(args), t.sort());
      }
      case TermKind::Binder: {
        Substitution sigma;
        std::vector<Term> bound;
        for (Term v : t.bound()) {
          Term fresh = fx_.tm.mk_variable(fx_.tm.fresh_name("r"), v.sort());
          sigma[v] = fresh;
          bound.push_back(fresh);
        }
        Term body = substitute(fx_.tm, alpha_variant(t.body()), sigma);
        return fx_.tm.mk_binder(t.binder(), std::move(bound), body);
      }
    }
    return t;
  }

  Term pick_var() { return vars_[pick_int(0, 3)]; }
  int pick_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

 private:
  Term binder(BinderKind kind, int depth) {
    std::vector<Term> bound = {vars_[pick_int(0, 3)]};
    if (pick_int(0, 2) == 0) {
      Term second = vars_[pick_int(0, 3)];
      if (!(second == bound[0])) bound.push_back(second);
    }
    return fx_.tm.mk_binder(kind, std::move(bound), boolean(depth - 1));
  }

  Fixture& fx_;
  std::mt19937 rng_;
  std::vector<Term> vars_;
};

TEST_CASE("interning coincides with structural equality on random terms") {
  Fixture fx;
  Generator g1(fx, 7), g2(fx, 7);
  for (int i = 0; i < 300; ++i) {
    Term t = g1.boolean(4);
    Term u = g2.boolean(4);
    CHECK(t == u);
    CHECK(to_string(t) == to_string(u));
    CHECK(de_bruijn(t) == de_bruijn(u));
  }
}

TEST_CASE("alpha_equal agrees with the de Bruijn oracle") {
  Fixture fx;
  Generator g(fx, 11);
  std::vector<Term> pool;
  for (int i = 0; i < 120; ++i) {
    Term t = g.boolean(3);
    pool.push_back(t);
    pool.push_back(g.alpha_variant(t));
  }
  for (Term t : pool) {
    for (Term u : pool) {
      REQUIRE(alpha_equal(t, u) == (de_bruijn(t) == de_bruijn(u)));
    }
  }
  // Equivalence relation on triples.
  for (std::size_t i = 0; i + 2 < pool.size(); i += 3) {
    Term t = pool[i], u = pool[i + 1], v = pool[i + 2];
    CHECK(alpha_equal(t, t));
    CHECK(alpha_equal(t, u) == alpha_equal(u, t));
    if (alpha_equal(t, u) && alpha_equal(u, v)) CHECK(alpha_equal(t, v));
  }
}

TEST_CASE("substitution agrees with the de Bruijn oracle") {
  Fixture fx;
  Generator g(fx, 23);
  for (int i = 0; i < 300; ++i) {
    Term t = g.boolean(3);
    Term x = g.pick_var();
    Term replacement = g.individual(2);
    Term out = substitute(fx.tm, t, {{x, replacement}});
    // Substituting into an alpha variant gives an alpha-equal result.
    Term out2 = substitute(fx.tm, g.alpha_variant(t), {{x, replacement}});
    CHECK(de_bruijn(out) == de_bruijn(out2));
    // Identity substitution.
    CHECK(alpha_equal(substitute(fx.tm, t, {{x, x}}), t));
    // No free variable of the replacement is captured.
    if (std::find(t.free_variables().begin(), t.free_variables().end(), x) !=
        t.free_variables().end()) {
      for (Term v : replacement.free_variables()) {
        auto fv = out.free_variables();
        CHECK(std::find(fv.begin(), fv.end(), v) != fv.end());
      }
    }
  }
}

TEST_CASE("concurrent interning") {
  Fixture fx;
  std::vector<Term> results(4);
  {
    std::vector<std::jthread> threads;
    for (int k = 0; k < 4; ++k) {
      threads.emplace_back([&, k] {
        Generator g(fx, 99);
        Term last;
        for (int i = 0; i < 200; ++i) last = g.boolean(4);
        results[k] = last;
      });
    }
  }
  for (Term t : results) CHECK(t == results[0]);
}

}  // namespace
}  // namespace alethe
