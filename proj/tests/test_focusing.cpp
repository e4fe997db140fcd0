#include "doctest.h"

#include "funcore/core/eval.hpp"
#include "funcore/core/printer.hpp"
#include "funcore/focusing.hpp"
#include "funcore/translate.hpp"
#include "helpers.hpp"

using namespace funcore;
using namespace funcore::core;
using testutil::cprod;
using testutil::cprogram;
using testutil::cstmt;

TEST_CASE("is_focused classifies statements") {
  CHECK(is_focused(cstmt("< 1 | star >")));
  CHECK(is_focused(cstmt("*(x, 4; a)")));
  CHECK(!is_focused(cstmt("+(mu b. *(2, 4; b), 5; a)")));
  CHECK(!is_focused(cstmt("< Cons(mu a. < 1 | a >, Nil) | star >")));
  CHECK(!is_focused(cstmt("ifz(mu a. < 0 | a >, < 1 | star >, < 2 | star >)")));
  CHECK(!is_focused(cstmt("f(mu a. < 1 | a >; star)")));
  CHECK(!is_focused(cstmt("< x | ap(mu a. < 1 | a >; star) >")));
  // mu bodies are inspected recursively
  CHECK(!is_focused(cstmt("< mu c. +(mu b. < 1 | b >, 5; c) | star >")));
}

TEST_CASE("focusing a binop lifts the non-value operand") {
  StatementPtr f = focus_statement(cstmt("+(mu b. *(2, 4; b), 5; a)"));
  CHECK(alpha_eq(f, cstmt("< mu b. *(2, 4; b) | mu~ x. +(x, 5; a) >")));
  CHECK(is_focused(f));
}

TEST_CASE("focusing lifts the leftmost non-value first") {
  StatementPtr f =
      focus_statement(cstmt("+(mu b. < 1 | b >, mu c. < 2 | c >; a)"));
  CHECK(alpha_eq(
      f, cstmt("< mu b. < 1 | b > | mu~ x. < mu c. < 2 | c > | mu~ y. +(x, y; a) > >")));
}

TEST_CASE("focusing constructors, destructors, ifz and calls") {
  CHECK(alpha_eq(focus_statement(cstmt("< Cons(mu a. < 1 | a >, Nil) | star >")),
                 cstmt("< mu b. < mu a. < 1 | a > | mu~ x. < Cons(x, Nil) | b > > | star >")));
  CHECK(alpha_eq(focus_statement(cstmt("< s | ap(mu a. < 1 | a >; star) >")),
                 cstmt("< s | mu~ y. < mu a. < 1 | a > | mu~ x. < y | ap(x; star) > > >")));
  CHECK(alpha_eq(focus_statement(cstmt("ifz(mu a. < 0 | a >, < 1 | star >, < 2 | star >)")),
                 cstmt("< mu a. < 0 | a > | mu~ x. ifz(x, < 1 | star >, < 2 | star >) >")));
  CHECK(alpha_eq(focus_statement(cstmt("f(mu a. < 1 | a >; star)")),
                 cstmt("< mu a. < 1 | a > | mu~ x. f(x; star) >")));
}

TEST_CASE("focusing is idempotent and preserves focused terms") {
  for (const char* src : {
           "+(mu b. *(2, 4; b), 5; a)",
           "< Cons(mu a. < 1 | a >, Nil) | star >",
           "f(mu a. < 1 | a >; star)",
           "< 1 | star >",
       }) {
    CAPTURE(src);
    StatementPtr once = focus_statement(cstmt(src));
    CHECK(is_focused(once));
    CHECK(alpha_eq(once, focus_statement(once)));
  }
}

TEST_CASE("focusing preserves cbv behaviour") {
  CoreProgram empty;
  StatementPtr s = cstmt("+(mu b. *(2, 4; b), 5; star)");
  CHECK(eval_stmt(empty, s, Strategy::Cbv, 1000, false).status == RunStatus::Stuck);
  CoreEvalResult r = eval_stmt(empty, focus_statement(s), Strategy::Cbv, 1000, false);
  REQUIRE(r.status == RunStatus::Ok);
  CHECK(show_producer(r.value) == "13");
}

TEST_CASE("simplification removes administrative redexes") {
  SimplifyResult r = simplify(cstmt("< mu a. *(2, 3; a) | star >"));
  CHECK(r.complete);
  CHECK(alpha_eq(r.stmt, cstmt("*(2, 3; star)")));

  r = simplify(cstmt("< 5 | mu~ x. *(x, x; star) >"));
  CHECK(alpha_eq(r.stmt, cstmt("*(5, 5; star)")));

  // a non-value producer against mu~ is not an administrative redex
  r = simplify(cstmt("< mu a. f(1; a) | mu~ x. *(x, x; star) >"));
  CHECK(r.complete);
  CHECK(alpha_eq(r.stmt, cstmt("f(1; mu~ x. *(x, x; star))")));
}

TEST_CASE("simplification of the focused multiplication step") {
  SimplifyResult r =
      simplify(cstmt("< mu c. mult'(xs; a, c) | mu~ z. *(x, z; b) >"));
  CHECK(r.complete);
  CHECK(alpha_eq(r.stmt, cstmt("mult'(xs; a, mu~ z. *(x, z; b))")));
}

TEST_CASE("case-of-case duplicates the outer match into the branches") {
  // both orders of matching on two lists simplify to the same statement
  const char* inner =
      "< mu a. < l | case { Nil => < Nil | a >, Cons(x, xs) => < Cons(x, xs) | a > } > | "
      "case { Nil => < 1 | star >, Cons(y, ys) => < 2 | star > } >";
  const char* direct =
      "< l | case { Nil => < Nil | case { Nil => < 1 | star >, Cons(y, ys) => < 2 | star > } "
      ">, Cons(x, xs) => < Cons(x, xs) | case { Nil => < 1 | star >, Cons(y, ys) => < 2 | "
      "star > } > } >";
  SimplifyResult a = simplify(cstmt(inner));
  SimplifyResult b = simplify(cstmt(direct));
  CHECK(a.complete);
  CHECK(alpha_eq(a.stmt, b.stmt));
}

TEST_CASE("simplification reports fuel exhaustion") {
  SimplifyResult r = simplify(cstmt("< mu a. < 5 | a > | mu~ x. < x | star > >"), 0);
  CHECK(!r.complete);
}

TEST_CASE("program focusing and simplification") {
  CoreProgram p = cprogram(
      "def g(n: Int; a: Int) := < mu b. +(n, 1; b) | a >\n"
      "g(mu c. < 4 | c >; star)");
  CoreProgram f = focus_program(p);
  CHECK(is_focused(f));
  SimplifyProgramResult s = simplify_program(f);
  CHECK(s.complete);
  CHECK(is_focused(s.prog.main_stmt ? s.prog.main_stmt : cstmt("< 1 | star >")));
  CoreEvalResult r = eval_stmt(s.prog, s.prog.main_stmt, Strategy::Cbv, 1000, false);
  REQUIRE(r.status == RunStatus::Ok);
  CHECK(show_producer(r.value) == "5");
}
