#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "funcore/fun/ast.hpp"
#include "funcore/fun/eval.hpp"
#include "funcore/fun/parser.hpp"
#include "funcore/fun/printer.hpp"
#include "funcore/fun/typing.hpp"
#include "helpers.hpp"

using namespace funcore;
using namespace funcore::fun;
using testutil::fprog;
using testutil::fterm;

namespace {

EvalResult run(const std::string& prog_src, long long fuel = 100000) {
  Program p = fprog(prog_src);
  REQUIRE(p.main);
  check_program(p);
  return eval(p, p.main, fuel, true);
}

EvalResult run_term(const std::string& term_src, long long fuel = 100000) {
  Program p;
  return eval(p, fterm(term_src), fuel, true);
}

bool has_rule(const EvalResult& r, const std::string& rule) {
  for (auto& s : r.steps)
    if (s.rule == rule) return true;
  return false;
}

} // namespace

TEST_CASE("parser round trips") {
  for (const char* src : {
           "2 * 3",
           "ifz(2, 5, 10)",
           "let x = 2 * 2 in x * x",
           "case Cons(1, Nil) of { Nil => 0, Cons(y, ys) => y }",
           "cocase { hd => 1, tl => repeat(1;) }",
           "cocase { fst => 1, snd => 2 * 3 }",
           "goto(0; a)",
           "label a { goto(0; a) }",
           "(\\x => x * x) 2",
           "\\x: Int => x + 1",
           "f(1, 2; a, b)",
           "Tup(2, 3).fst",
           "x.hd.tl.hd",
           "2 * (1 + 1)",
           "1 - -1",
           "letcc k { 5 }",
           "callcc(f)",
           "cc(f)",
           "labelC a { 5 }",
           "(Nil : List(Int))",
       }) {
    CAPTURE(src);
    TermPtr t = fterm(src);
    TermPtr again = fterm(show_term(t));
    CHECK(alpha_eq(t, again));
  }
}

TEST_CASE("program parsing and printing") {
  Program p = fprog("def fac(n: Int) : Int := ifz(n, 1, n * fac(n - 1;))\nfac(1;)");
  CHECK(p.defs.size() == 1);
  CHECK(p.defs[0].name == "fac");
  REQUIRE(p.main);
  Program again = fprog(show_program(p));
  CHECK(again.defs.size() == 1);
  CHECK(alpha_eq(p.main, again.main));
  CHECK(alpha_eq(p.defs[0].body, again.defs[0].body));

  CHECK(fprog("").defs.empty());

  auto bad = parse_program("def f( := ");
  CHECK(std::holds_alternative<ParseError>(bad));
}

TEST_CASE("pretty printing is precedence aware") {
  CHECK(show_term(fterm("2 * (1 + 1)")) == "2 * (1 + 1)");
  CHECK(show_term(fterm("2 * 1 + 1")) == "2 * 1 + 1");
  CHECK(show_term(fterm("5")) == "5");
}

TEST_CASE("substitution avoids capture") {
  // (\y => x) with x := y must rename the binder.
  TermPtr t = fterm("\\y => x");
  TermPtr r = subst_var(t, "x", fterm("y"));
  const Lam* lam = as<Lam>(r);
  REQUIRE(lam);
  CHECK(lam->binder != "y");
  CHECK(alpha_eq(r, fterm("\\z => y")));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(fterm("\\x => x"), fterm("\\y => y")));
  CHECK(!alpha_eq(fterm("\\x => x"), fterm("\\y => 1")));
  CHECK(alpha_eq(fterm("label a { goto(0; a) }"), fterm("label b { goto(0; b) }")));
  CHECK(!alpha_eq(fterm("goto(0; a)"), fterm("goto(0; b)")));
}

TEST_CASE("typing: inference examples") {
  Program empty;
  CHECK(infer({}, empty, fterm("2 * 3"))->kind == TypeKind::Int);
  CHECK_THROWS_AS(infer({}, empty, fterm("Nil")), TypeError);
  TypingContext ctx;
  ctx.bind("x", Mode::Prd, t_int());
  CHECK_THROWS_AS(infer(ctx, empty, fterm("Tup(x, Nil)")), TypeError);
  TypePtr ty = infer({}, empty, fterm("case Cons(1, Nil) of { Nil => 0, Cons(y, ys) => y }"));
  CHECK(type_eq(ty, t_int()));
}

TEST_CASE("typing: check examples with label and goto") {
  Program empty;
  CHECK_NOTHROW(check({}, empty, fterm("label a { goto(0; a) }"), t_int()));
  CHECK_THROWS_AS(check({}, empty, fterm("goto(0; a)"), t_int()), TypeError);
  CHECK_THROWS_AS(check({}, empty, fterm("label a { 5 }"), t_list(t_int())), TypeError);
  // infer/check agreement
  TypePtr ty = infer({}, empty, fterm("2 + 2"));
  CHECK_NOTHROW(check({}, empty, fterm("2 + 2"), ty));
}

TEST_CASE("typing: programs") {
  CHECK_NOTHROW(check_program(
      fprog("def fac(n: Int) : Int := ifz(n, 1, n * fac(n - 1;))")));
  CHECK_NOTHROW(check_program(fprog(
      "def mult(l: List(Int)) : Int := label a { mult'(l; a) }\n"
      "def mult'(l: List(Int); a: Int) : Int := case l of { Nil => 1, Cons(x, xs) => "
      "ifz(x, goto(0; a), x * mult'(xs; a)) }")));
  CHECK_THROWS_AS(check_program(fprog("def f(y: Int) : Int := x")), TypeError);
}

TEST_CASE("typing: reified contexts") {
  Program empty;
  // E = [] + 5 at Int
  {
    auto d = decompose(fterm("(2 * 4) + 5"));
    REQUIRE(d);
    REQUIRE(show_context(d->ctx) == "_ + 5");
    CHECK(type_eq(type_reified_context({}, empty, d->ctx, t_int()), t_int()));
    CHECK_THROWS_AS(type_reified_context({}, empty, d->ctx, t_list(t_int())), TypeError);
  }
  // E = [].hd at Stream(Int)
  {
    TypingContext ctx;
    ctx.bind("s", Mode::Prd, t_stream(t_int()));
    auto d = decompose(mk(Destruct{fterm("s"), Dtor::Hd}));
    REQUIRE(d);
    CHECK(type_eq(type_reified_context(ctx, empty, d->ctx, t_stream(t_int())), t_int()));
  }
}

TEST_CASE("evaluation: arithmetic and let") {
  CHECK(show_term(run_term("2 * 3").final_term) == "6");
  CHECK(show_term(run_term("ifz(2, 5, 10)").final_term) == "10");
  CHECK(show_term(run_term("(2 * 3) * 4").final_term) == "24");
  EvalResult r = run_term("let x = 2 * 2 in x * x");
  CHECK(show_term(r.final_term) == "16");
  // 2 * 2 is computed once
  int muls = 0;
  for (auto& s : r.steps)
    if (s.rule == "binop") ++muls;
  CHECK(muls == 2); // 2*2 then 4*4
}

TEST_CASE("evaluation: functions, data, codata") {
  CHECK(show_term(run_term("(\\x => x * x) 2").final_term) == "4");
  CHECK(show_term(run("def swap(x: Pair(Int, Int)) : Pair(Int, Int) := case x of { Tup(y, z) "
                      "=> Tup(z, y) }\nswap(Tup(2, 3);)")
                      .final_term) == "Tup(3, 2)");
  EvalResult r = run("def swap_lazy(x: LPair(Int, Int)) : LPair(Int, Int) := cocase { fst => "
                     "x.snd, snd => x.fst }\nswap_lazy(cocase { fst => 1, snd => 2 * 3 };).snd");
  CHECK(show_term(r.final_term) == "1");
  CHECK(!has_rule(r, "binop")); // 2 * 3 is never evaluated
}

TEST_CASE("evaluation: fac(1) via call rule") {
  EvalResult r = run("def fac(n: Int) : Int := ifz(n, 1, n * fac(n - 1;))\nfac(1;)");
  CHECK(show_term(r.final_term) == "1");
  CHECK(r.steps.front().rule == "call");
}

TEST_CASE("evaluation: label and goto") {
  CHECK(show_term(run_term("label a { 5 }").final_term) == "5");
  CHECK(show_term(run_term("label a { goto(3; a) + 1 }").final_term) == "3");
  // a label whose covariable is unused is a no-op
  CHECK(show_term(run_term("label a { 2 + 2 }").final_term) == "4");
  // goto discards its surrounding context
  CHECK(show_term(run_term("label a { 10 * goto(7; a) }").final_term) == "7");
  // nested labels: jump to the outer one
  CHECK(show_term(run_term("label a { 1 + label b { goto(5; a) } }").final_term) == "5");
}

TEST_CASE("evaluation: stuck terms and fuel") {
  EvalResult r = run_term("Nil.hd");
  CHECK(r.status == RunStatus::Stuck);
  Program loop = fprog("def f(x: Int) : Int := f(x;)\nf(0;)");
  EvalResult l = eval(loop, loop.main, 50, false);
  CHECK(l.status == RunStatus::Fuel);
}

TEST_CASE("decompose finds the leftmost redex") {
  auto d = decompose(fterm("(2 * 4) + 5"));
  REQUIRE(d);
  CHECK(show_term(d->redex) == "2 * 4");
  CHECK(show_context(d->ctx) == "_ + 5");
  CHECK(!decompose(fterm("5")));
  CHECK(!decompose(fterm("cocase { fst => 1, snd => 2 * 3 }")));
}
