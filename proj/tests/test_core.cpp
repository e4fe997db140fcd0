#include "doctest.h"

#include "funcore/core/ast.hpp"
#include "funcore/core/eval.hpp"
#include "funcore/core/parser.hpp"
#include "funcore/core/printer.hpp"
#include "funcore/core/typing.hpp"
#include "helpers.hpp"

using namespace funcore;
using namespace funcore::core;
using testutil::cprod;
using testutil::cprogram;
using testutil::cstmt;

namespace {

std::vector<std::string> rules(const CoreEvalResult& r) {
  std::vector<std::string> out;
  for (auto& s : r.steps) out.push_back(s.rule);
  return out;
}

CoreEvalResult go(const CoreProgram& p, const std::string& s, Strategy st = Strategy::Cbv,
                  long long fuel = 100000) {
  return eval_stmt(p, cstmt(s), st, fuel, true);
}

} // namespace

TEST_CASE("core parser round trips") {
  for (const char* src : {
           "< 1 | star >",
           "< mu a. *(2, 3; a) | star >",
           "*(2, 3; star)",
           "ifz(2, < 5 | star >, < 10 | star >)",
           "< Cons(1, Nil) | case { Nil => < 0 | star >, Cons(x, xs) => < x | star > } >",
           "< cocase { hd(a) => < 1 | a >, tl(b) => < rep | b > } | hd(star) >",
           "< cocase { ap(x; b) => < x | b > } | ap(2; star) >",
           "fac(1; star)",
           "< x | mu~ y. *(y, y; star) >",
           "< Tup(2, 3) | case { Tup(y, z) => < Tup(z, y) | star > } >",
           "< 1 | fst(star) >",
           "-(n, 1; mu~ x. fac(x; mu~ r. *(n, r; a)))",
       }) {
    CAPTURE(src);
    StatementPtr s = cstmt(src);
    CHECK(alpha_eq(s, cstmt(show_statement(s))));
  }
}

TEST_CASE("core alpha equivalence") {
  CHECK(alpha_eq(cprod("mu a. < 1 | a >"), cprod("mu b. < 1 | b >")));
  CHECK(!alpha_eq(cstmt("< 1 | star >"), cstmt("< 2 | star >")));
}

TEST_CASE("values and covalues per strategy") {
  CHECK(is_value(cprod("1"), Strategy::Cbv));
  CHECK(is_value(cprod("x"), Strategy::Cbv));
  CHECK(is_value(cprod("Cons(1, Nil)"), Strategy::Cbv));
  CHECK(!is_value(cprod("Cons(mu a. < 1 | a >, Nil)"), Strategy::Cbv));
  CHECK(!is_value(cprod("mu a. < 1 | a >"), Strategy::Cbv));
  CHECK(is_value(cprod("mu a. < 1 | a >"), Strategy::Cbn));

  ConsumerPtr mt = std::get<Cut>(cstmt("< 1 | mu~ x. < x | star > >")->node).consumer;
  CHECK(is_covalue(mt, Strategy::Cbv));
  CHECK(!is_covalue(mt, Strategy::Cbn));
}

TEST_CASE("arithmetic statements evaluate") {
  CoreProgram empty;
  CoreEvalResult r = go(empty, "< mu a. *(2, 3; a) | star >");
  CHECK(r.status == RunStatus::Ok);
  CHECK(show_producer(r.value) == "6");
  CHECK(rules(r) == std::vector<std::string>{"mu", "binop"});

  r = go(empty, "< mu a. ifz(2, < 5 | a >, < 10 | a >) | star >");
  CHECK(show_producer(r.value) == "10");
  CHECK(rules(r) == std::vector<std::string>{"mu", "ifz-nonzero"});
}

TEST_CASE("let translation target computes 2 * 2 once") {
  CoreProgram empty;
  CoreEvalResult r =
      go(empty, "< mu b. *(2, 2; b) | mu~ x. < mu c. *(x, x; c) | star > >");
  CHECK(r.status == RunStatus::Ok);
  CHECK(show_producer(r.value) == "16");
  int squares = 0;
  for (auto& s : r.steps)
    if (s.rule == "binop") ++squares;
  CHECK(squares == 2);
  // exactly one multiplication of 2 by 2
  int two_by_two = 0;
  for (auto& s : r.steps)
    if (s.term.find("*(2, 2;") != std::string::npos) ++two_by_two;
  CHECK(two_by_two == 1);
}

TEST_CASE("fac(1) follows the eight-step rule sequence") {
  CoreProgram p = cprogram(
      "def fac(n: Int; a: Int) := ifz(n, < 1 | a >, -(n, 1; mu~ x. fac(x; mu~ r. *(n, r; "
      "a))))");
  CoreEvalResult r = go(p, "fac(1; star)");
  CHECK(r.status == RunStatus::Ok);
  CHECK(show_producer(r.value) == "1");
  CHECK(rules(r) == std::vector<std::string>{"call", "ifz-nonzero", "binop", "mu-tilde",
                                             "call", "ifz-zero", "mu-tilde", "binop"});
}

TEST_CASE("swap of a strict pair") {
  CoreProgram empty;
  CoreEvalResult r =
      go(empty, "< Tup(2, 3) | case { Tup(y, z) => < Tup(z, y) | star > } >");
  CHECK(show_producer(r.value) == "Tup(3, 2)");
  CHECK(rules(r) == std::vector<std::string>{"case"});
}

TEST_CASE("swap_lazy never evaluates the product") {
  CoreProgram p = cprogram(
      "def swap_lazy(x: LPair(Int, Int); a: LPair(Int, Int)) := "
      "< cocase { fst(b) => < x | snd(b) >, snd(b) => < x | fst(b) > } | a >");
  CoreEvalResult r = go(
      p,
      "swap_lazy(cocase { fst(a) => < 1 | a >, snd(a) => *(2, 3; a) }; snd(star))");
  CHECK(r.status == RunStatus::Ok);
  CHECK(show_producer(r.value) == "1");
  for (auto& s : r.steps) CHECK(s.rule != "binop");
}

TEST_CASE("lambda application evaluates to four") {
  CoreProgram empty;
  CoreEvalResult r =
      go(empty, "< cocase { ap(x; b) => < mu c. *(x, x; c) | b > } | ap(2; star) >");
  CHECK(r.status == RunStatus::Ok);
  CHECK(show_producer(r.value) == "4");
}

TEST_CASE("strategy split on the critical pair and the eta example") {
  CoreProgram empty;
  // eta lhs: both strategies fire mu-tilde first
  std::string eta_lhs =
      "< cocase { ap(x; a) => < mu b. *(1, 1; star) | ap(x; a) > } | mu~ y. < 7 | star > >";
  CoreOutcome v = step_stmt(empty, cstmt(eta_lhs), Strategy::Cbv);
  CoreOutcome n = step_stmt(empty, cstmt(eta_lhs), Strategy::Cbn);
  CHECK(v.rule == "mu-tilde");
  CHECK(n.rule == "mu-tilde");
  CHECK(alpha_eq(v.next, n.next));
  CHECK(alpha_eq(v.next, cstmt("< 7 | star >")));

  // critical pair: cbv fires mu, cbn fires mu-tilde
  std::string crit = "< mu b. *(1, 1; b) | mu~ y. < 7 | star > >";
  CoreOutcome cv = step_stmt(empty, cstmt(crit), Strategy::Cbv);
  CoreOutcome cn = step_stmt(empty, cstmt(crit), Strategy::Cbn);
  CHECK(cv.rule == "mu");
  CHECK(alpha_eq(cv.next, cstmt("*(1, 1; mu~ y. < 7 | star >)")));
  CHECK(cn.rule == "mu-tilde");
  CHECK(alpha_eq(cn.next, cstmt("< 7 | star >")));
}

TEST_CASE("unfocused statements report distinctly") {
  CoreProgram empty;
  CoreEvalResult r = go(empty, "+(mu b. *(2, 4; b), 5; star)");
  CHECK(r.status == RunStatus::Stuck);
  CHECK(r.reason.find("unfocused argument") == 0);
  // cbn does not require focusing for destructor arguments
  CoreEvalResult n = go(empty,
                        "< cocase { ap(x; b) => < x | b > } | ap(mu a. < 3 | a >; star) >",
                        Strategy::Cbn);
  CHECK(n.status == RunStatus::Ok);
  CHECK(show_producer(n.value) == "3");
}

TEST_CASE("terminal statements require star not free in the value") {
  CoreProgram empty;
  CoreEvalResult r = go(empty, "< 7 | star >");
  CHECK(r.status == RunStatus::Ok);
  CHECK(show_producer(r.value) == "7");
  CoreEvalResult bad = go(empty, "< cocase { ap(x; b) => < x | star > } | star >");
  CHECK(bad.status == RunStatus::Stuck);
}

TEST_CASE("core typechecking") {
  CHECK_NOTHROW(check_core_program(cprogram(
      "def fac(n: Int; a: Int) := ifz(n, < 1 | a >, -(n, 1; mu~ x. fac(x; mu~ r. *(n, r; "
      "a))))")));
  CHECK_NOTHROW(check_core_program(cprogram(
      "def mult(l: List(Int); a: Int) := mult'(l; a, a)\n"
      "def mult'(l: List(Int); a: Int, b: Int) := < l | case { Nil => < 1 | b >, "
      "Cons(x, xs) => ifz(x, < 0 | a >, mult'(xs; a, mu~ z. *(x, z; b))) } >")));

  TypingContext star_ctx;
  star_ctx.bind("star", Mode::Cns, t_int());
  CoreProgram empty;
  CHECK_NOTHROW(check_statement(star_ctx, empty, cstmt("< mu a. *(2, 3; a) | star >")));
  CHECK_THROWS_AS(check_statement(star_ctx, empty, cstmt("*(1, Nil; star)")), TypeError);
  CHECK_THROWS_AS(check_statement(star_ctx, empty, cstmt("< 1 | unbound >")), TypeError);
  CHECK_NOTHROW(check_producer({}, empty, cprod("Cons(1, Nil)"), t_list(t_int())));
  CHECK_THROWS_AS(check_producer({}, empty, cprod("Cons(1, 2)"), t_list(t_int())), TypeError);
  CHECK_NOTHROW(check_consumer(star_ctx, empty, std::get<Cut>(cstmt("< 1 | mu~ x. *(x, x; "
                                                                    "star) >")->node).consumer,
                               t_int()));
}

TEST_CASE("core program with a main producer runs against star") {
  CoreProgram p = cprogram("< mu a. +(1, 2; a) | star >");
  REQUIRE(p.main_stmt);
  CoreProgram q;
  q.main_prod = cprod("mu a. +(1, 2; a)");
  CoreEvalResult r = run_producer(q, q.main_prod, Strategy::Cbv, 1000, false);
  CHECK(r.status == RunStatus::Ok);
  CHECK(show_producer(r.value) == "3");
}
