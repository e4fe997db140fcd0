#include "doctest.h"

#include "funcore/core/eval.hpp"
#include "funcore/core/printer.hpp"
#include "funcore/core/typing.hpp"
#include "funcore/focusing.hpp"
#include "funcore/fun/eval.hpp"
#include "funcore/fun/typing.hpp"
#include "funcore/translate.hpp"
#include "helpers.hpp"

using namespace funcore;
using testutil::cprod;
using testutil::cprogram;
using testutil::cstmt;
using testutil::fprog;
using testutil::fterm;

namespace {

core::ProducerPtr tr(const std::string& src) {
  fun::TermPtr t = fterm(src);
  FreshSupply fresh = make_supply(t);
  return translate_term(t, fresh);
}

} // namespace

TEST_CASE("translation of the first-order fragment") {
  CHECK(alpha_eq(tr("2 * 3"), cprod("mu a. *(2, 3; a)")));
  CHECK(alpha_eq(tr("ifz(2, 5, 10)"), cprod("mu a. ifz(2, < 5 | a >, < 10 | a >)")));
  CHECK(alpha_eq(tr("let x = 2 * 2 in x * x"),
                 cprod("mu a. < mu b. *(2, 2; b) | mu~ x. < mu c. *(x, x; c) | a > >")));
  CHECK(alpha_eq(tr("fac(5;)"), cprod("mu a. fac(5; a)")));
}

TEST_CASE("translation of data and codata") {
  CHECK(alpha_eq(tr("Cons(1, Nil)"), cprod("Cons(1, Nil)")));
  CHECK(alpha_eq(tr("case Cons(1, Nil) of { Nil => 0, Cons(y, ys) => y }"),
                 cprod("mu a. < Cons(1, Nil) | case { Nil => < 0 | a >, "
                       "Cons(y, ys) => < y | a > } >")));
  CHECK(alpha_eq(tr("s.hd"), cprod("mu a. < s | hd(a) >")));
  CHECK(alpha_eq(tr("cocase { fst => 1, snd => 2 * 3 }"),
                 cprod("cocase { fst(a) => < 1 | a >, snd(b) => < mu c. *(2, 3; c) | b > }")));
}

TEST_CASE("translation of functions") {
  CHECK(alpha_eq(tr("\\x => x * x"),
                 cprod("cocase { ap(x; a) => < mu b. *(x, x; b) | a > }")));
  CHECK(alpha_eq(tr("(\\x => x) 2"),
                 cprod("mu a. < cocase { ap(x; b) => < x | b > } | ap(2; a) >")));
}

TEST_CASE("translation of label, goto and control operators") {
  // the label's covariable is reused; goto gets a fresh unused one
  CHECK(alpha_eq(tr("label a { goto(0; a) }"),
                 cprod("mu a. < mu b. < 0 | a > | a >")));
  CHECK(alpha_eq(tr("label a { 5 }"), cprod("mu a. < 5 | a >")));
  CHECK(alpha_eq(
      tr("letcc k { k }"),
      cprod("mu a. < cocase { ap(x; b) => < x | a > } | mu~ k. < k | a > >")));
  CHECK(alpha_eq(tr("callcc(f)"),
                 cprod("mu a. < f | ap(cocase { ap(x; b) => < x | a > }; a) >")));
  CHECK(alpha_eq(tr("cc(f)"),
                 cprod("mu a. < f | ap(cocase { ap(x; b) => < x | a > }; star) >")));
  CHECK(alpha_eq(tr("labelC a { 5 }"), cprod("mu a. < 5 | star >")));
}

TEST_CASE("ascriptions are dropped by translation") {
  CHECK(alpha_eq(tr("(Nil : List(Int))"), cprod("Nil")));
}

TEST_CASE("definitions gain a covariable parameter") {
  fun::Program p = fprog("def fac(n: Int) : Int := ifz(n, 1, n * fac(n - 1;))");
  FreshSupply fresh = make_supply(p);
  core::CoreDefinition d = translate_def(p.defs[0], fresh);
  CHECK(d.name == "fac");
  REQUIRE(d.params.size() == 1);
  CHECK(d.params[0].name == "n");
  REQUIRE(d.coparams.size() == 1);
  CHECK(type_eq(d.coparams[0].type, t_int()));
  // body is < translated body | a >
  const core::Cut* cut = core::as<core::Cut>(d.body);
  REQUIRE(cut);
  CHECK(core::as<core::Covar>(cut->consumer)->name == d.coparams[0].name);
}

TEST_CASE("translate, focus and simplify yields the direct core factorial") {
  fun::Program p = fprog("def fac(n: Int) : Int := ifz(n, 1, n * fac(n - 1;))\nfac(1;)");
  FreshSupply fresh = make_supply(p);
  core::CoreProgram c = translate_program(p, fresh);
  core::CoreProgram f = focus_program(c);
  SimplifyProgramResult s = simplify_program(f);
  CHECK(s.complete);
  core::CoreProgram expect = cprogram(
      "def fac(n: Int; a: Int) := ifz(n, < 1 | a >, -(n, 1; mu~ x. fac(x; mu~ r. *(n, r; "
      "a))))\n"
      "< mu b. fac(1; b) | star >");
  // compare defs up to renaming; the mains separately
  core::CoreProgram lhs{s.prog.defs, nullptr, nullptr};
  core::CoreProgram rhs{expect.defs, nullptr, nullptr};
  CHECK(alpha_eq(lhs, rhs));
  REQUIRE(s.prog.main_prod);
  CHECK(alpha_eq(s.prog.main_prod, cprod("mu b. fac(1; b)")));
}

TEST_CASE("translation preserves types") {
  fun::Program fe;
  core::CoreProgram ce;
  for (const char* src : {
           "2 * 3",
           "let x = 2 * 2 in x * x",
           "case Cons(1, Nil) of { Nil => 0, Cons(y, ys) => y }",
           "cocase { fst => 1, snd => 2 * 3 }",
           "(\\x: Int => x * x) 2",
           "Tup(1, Cons(2, Nil))",
       }) {
    CAPTURE(src);
    fun::TermPtr t = fterm(src);
    TypePtr ty = fun::infer({}, fe, t);
    FreshSupply fresh = make_supply(t);
    core::ProducerPtr prd = translate_term(t, fresh);
    CHECK_NOTHROW(core::check_producer({}, ce, prd, ty));
    // focusing preserves the type as well
    CHECK_NOTHROW(core::check_producer({}, ce, focus_producer(prd, fresh), ty));
  }
}

TEST_CASE("translation agrees with direct evaluation") {
  for (const char* src : {
           "2 * 3",
           "ifz(0, 5, 10)",
           "let x = 2 * 2 in x * x",
           "(\\x => x * x) 2",
           "label a { goto(3; a) + 1 }",
       }) {
    CAPTURE(src);
    fun::Program fe;
    fun::EvalResult direct = fun::eval(fe, fterm(src), 100000, false);
    REQUIRE(direct.status == RunStatus::Ok);

    fun::TermPtr t = fterm(src);
    FreshSupply fresh = make_supply(t);
    core::ProducerPtr prd = focus_producer(translate_term(t, fresh), fresh);
    core::CoreProgram ce;
    core::CoreEvalResult viaCore = core::run_producer(ce, prd, core::Strategy::Cbv, 100000, false);
    REQUIRE(viaCore.status == RunStatus::Ok);
    CHECK(fun::show_term(direct.final_term) == core::show_producer(viaCore.value));
  }
}

TEST_CASE("reified contexts cannot be translated") {
  fun::TermPtr t = fterm("(2 * 4) + 5");
  auto d = fun::decompose(t);
  REQUIRE(d);
  fun::CoTarget reified{"", std::make_shared<const fun::EvalContext>(d->ctx)};
  fun::TermPtr g = fun::mk(fun::Goto{fterm("1"), reified});
  FreshSupply fresh = make_supply(g);
  CHECK_THROWS_AS(translate_term(g, fresh), std::invalid_argument);
}
