// Acceptance checks. Takes the sample-program directory as argv[1] and
// prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "funcore/core/eval.hpp"
#include "funcore/core/printer.hpp"
#include "funcore/core/typing.hpp"
#include "funcore/focusing.hpp"
#include "funcore/fun/eval.hpp"
#include "funcore/fun/printer.hpp"
#include "funcore/fun/typing.hpp"
#include "funcore/gen.hpp"
#include "funcore/translate.hpp"
#include "helpers.hpp"

using namespace funcore;
using testutil::cprod;
using testutil::cprogram;
using testutil::cstmt;
using testutil::fprog;
using testutil::fterm;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

bool expect(bool ok, const std::string& what) {
  if (!ok) note(what);
  return ok;
}

void report(int i, const char* name, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", i, name);
  for (auto& n : g_notes) std::printf("       - %s\n", n.c_str());
  g_notes.clear();
  if (!ok) ++g_failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs a core statement under cbv and returns the printed terminal value,
// or "<stuck>"/"<fuel>".
std::string run_core(const core::CoreProgram& p, const core::StatementPtr& s,
                     std::vector<std::string>* rules = nullptr) {
  core::CoreEvalResult r = core::eval_stmt(p, s, core::Strategy::Cbv, 100000, rules != nullptr);
  if (rules)
    for (auto& st : r.steps) rules->push_back(st.rule);
  if (r.status == RunStatus::Stuck) return "<stuck>";
  if (r.status == RunStatus::Fuel) return "<fuel>";
  return core::show_producer(r.value);
}

std::string run_fun(const fun::Program& p, const fun::TermPtr& t,
                    std::vector<std::string>* rules = nullptr) {
  fun::EvalResult r = fun::eval(p, t, 100000, rules != nullptr);
  if (rules)
    for (auto& st : r.steps) rules->push_back(st.rule);
  if (r.status == RunStatus::Stuck) return "<stuck>";
  if (r.status == RunStatus::Fuel) return "<fuel>";
  return fun::show_term(r.final_term);
}

bool criterion1_goldens() {
  bool ok = true;
  core::CoreProgram none;

  ok &= expect(run_core(none, cstmt("< mu a. *(2, 3; a) | star >")) == "6",
               "2 * 3 did not run to 6");
  ok &= expect(run_core(none, cstmt("< mu a. ifz(2, < 5 | a >, < 10 | a >) | star >")) == "10",
               "ifz(2, 5, 10) did not run to 10");

  {
    std::vector<std::string> rules;
    core::CoreEvalResult r = core::eval_stmt(
        none, cstmt("< mu b. *(2, 2; b) | mu~ x. < mu c. *(x, x; c) | star > >"),
        core::Strategy::Cbv, 1000, true);
    ok &= expect(r.status == RunStatus::Ok && core::show_producer(r.value) == "16",
                 "let-style sharing did not run to 16");
    int shared = 0;
    for (auto& st : r.steps)
      if (st.term.find("*(2, 2;") != std::string::npos) ++shared;
    ok &= expect(shared == 1, "2 * 2 was not computed exactly once");
  }

  {
    core::CoreProgram fac = cprogram(
        "def fac(n: Int; a: Int) := ifz(n, < 1 | a >, -(n, 1; mu~ x. fac(x; mu~ r. *(n, r; "
        "a))))");
    std::vector<std::string> rules;
    ok &= expect(run_core(fac, cstmt("fac(1; star)"), &rules) == "1",
                 "fac(1) did not run to 1");
    std::vector<std::string> want = {"call",    "ifz-nonzero", "binop", "mu-tilde",
                                     "call",    "ifz-zero",    "mu-tilde", "binop"};
    ok &= expect(rules == want, "fac(1) rule sequence differs");
  }

  ok &= expect(run_core(none, cstmt("< Tup(2, 3) | case { Tup(y, z) => < Tup(z, y) | star > } >")) ==
                   "Tup(3, 2)",
               "strict swap did not run to Tup(3, 2)");

  {
    core::CoreProgram p = cprogram(
        "def swap_lazy(x: LPair(Int, Int); a: LPair(Int, Int)) := "
        "< cocase { fst(b) => < x | snd(b) >, snd(b) => < x | fst(b) > } | a >");
    std::vector<std::string> rules;
    ok &= expect(
        run_core(p, cstmt("swap_lazy(cocase { fst(a) => < 1 | a >, snd(a) => *(2, 3; a) }; "
                          "snd(star))"),
                 &rules) == "1",
        "lazy swap did not run to 1");
    bool mul = false;
    for (auto& r : rules)
      if (r == "binop") mul = true;
    ok &= expect(!mul, "lazy swap evaluated the product");
  }

  ok &= expect(run_core(none, cstmt("< cocase { ap(x; b) => < mu c. *(x, x; c) | b > } | "
                                    "ap(2; star) >")) == "4",
               "squaring lambda did not run to 4");

  ok &= expect(run_core(none, focus_statement(cstmt("+(mu b. *(2, 4; b), 5; star)"))) == "13",
               "focused sum did not run to 13");

  {
    fun::Program fe;
    ok &= expect(run_fun(fe, fterm("(2 * 3) * 4")) == "24", "(2*3)*4 in Fun did not run to 24");
    ok &= expect(run_core(none, focus_statement(cstmt("*(mu b. *(2, 3; b), 4; star)"))) == "24",
                 "(2*3)*4 in Core did not run to 24");
  }

  return ok;
}

bool criterion2_translation(const std::string& dir) {
  bool ok = true;

  // compile --focus --simplify of the surface mult program matches the
  // expected core program, definition for definition.
  fun::Program fp = fprog(slurp(dir + "/mult.fun"));
  FreshSupply fresh = make_supply(fp);
  SimplifyProgramResult got = simplify_program(focus_program(translate_program(fp, fresh)));
  ok &= expect(got.complete, "simplification ran out of fuel");
  core::CoreProgram want = cprogram(slurp(dir + "/mult.core"));
  core::CoreProgram lhs{got.prog.defs, nullptr, nullptr};
  core::CoreProgram rhs{want.defs, nullptr, nullptr};
  ok &= expect(alpha_eq(lhs, rhs), "compiled mult definitions differ from the expected core");

  // focusing the unfocused helper body introduces exactly one administrative
  // redex; simplifying it yields the direct definition.
  core::StatementPtr unfocused = cstmt(
      "< l | case { Nil => < 1 | b >, Cons(x, xs) => "
      "ifz(x, < 0 | a >, *(x, mu g. mult'(xs; a, g); b)) } >");
  core::StatementPtr focused_want = cstmt(
      "< l | case { Nil => < 1 | b >, Cons(x, xs) => "
      "ifz(x, < 0 | a >, < mu g. mult'(xs; a, g) | mu~ z. *(x, z; b) >) } >");
  core::StatementPtr simplified_want = cstmt(
      "< l | case { Nil => < 1 | b >, Cons(x, xs) => "
      "ifz(x, < 0 | a >, mult'(xs; a, mu~ z. *(x, z; b))) } >");
  core::StatementPtr focused = focus_statement(unfocused);
  ok &= expect(alpha_eq(focused, focused_want), "focused helper body differs");
  SimplifyResult simp = simplify(focused);
  ok &= expect(simp.complete && alpha_eq(simp.stmt, simplified_want),
               "simplified helper body differs");
  return ok;
}

bool criterion3_theorems() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  const fun::Program& lib = gen_library();

  FreshSupply lib_fresh = make_supply(lib);
  core::CoreProgram core_lib = translate_program(lib, lib_fresh);
  core::CoreProgram core_lib_f = focus_program(core_lib);

  int progress_fail = 0, preserve_fail = 0, translate_fail = 0, core_fail = 0;

  for (std::uint64_t i = 0; i < 1000; ++i) {
    TypePtr tau = gen_type(i * 0x9e3779b97f4a7c15ull + 1);
    int depth = 1 + (int)(i % 4);
    fun::TermPtr t = gen_typed_term(i, {}, tau, depth);

    // progress and weak preservation: stepping never sticks, and every
    // intermediate term still checks at the original type
    fun::TermPtr cur = fun::strip_ascriptions(t);
    for (int s = 0; s < 100000; ++s) {
      fun::StepOutcome out = fun::step(lib, cur);
      if (out.kind == fun::StepOutcome::IsValue) break;
      if (out.kind == fun::StepOutcome::Stuck) {
        if (progress_fail++ == 0)
          note("stuck at seed " + std::to_string(i) + ": " + out.reason);
        break;
      }
      cur = out.term;
      try {
        fun::check({}, lib, cur, tau);
      } catch (const TypeError& e) {
        if (preserve_fail++ == 0)
          note("preservation failed at seed " + std::to_string(i) + ": " + e.what());
        break;
      }
    }

    // the translated producer checks at the source type
    FreshSupply fresh = make_supply(t);
    core::ProducerPtr prd = translate_term(t, fresh);
    try {
      core::check_producer({}, core_lib, prd, tau);
    } catch (const TypeError& e) {
      if (translate_fail++ == 0)
        note("translated producer failed at seed " + std::to_string(i) + ": " + e.what());
    }

    // the focused translation makes progress and stays well typed
    core::ProducerPtr fprd = focus_producer(prd, fresh);
    TypingContext star_ctx;
    star_ctx.bind(core::kStar, Mode::Cns, tau);
    core::StatementPtr stmt = core::mks(core::Cut{fprd, core::mkc(core::Covar{core::kStar})});
    for (int s = 0; s < 100000; ++s) {
      core::CoreOutcome out = core::step_stmt(core_lib_f, stmt, core::Strategy::Cbv);
      if (out.kind == core::CoreOutcome::Terminal) break;
      if (out.kind == core::CoreOutcome::Stuck) {
        if (core_fail++ == 0)
          note("core stuck at seed " + std::to_string(i) + ": " + out.reason);
        break;
      }
      stmt = out.next;
      try {
        core::check_statement(star_ctx, core_lib_f, stmt);
      } catch (const TypeError& e) {
        if (core_fail++ == 0)
          note("core preservation failed at seed " + std::to_string(i) + ": " + e.what());
        break;
      }
    }
  }

  ok &= expect(progress_fail == 0,
               std::to_string(progress_fail) + " terms violated progress");
  ok &= expect(preserve_fail == 0,
               std::to_string(preserve_fail) + " terms violated preservation");
  ok &= expect(translate_fail == 0,
               std::to_string(translate_fail) + " translations failed to typecheck");
  ok &= expect(core_fail == 0,
               std::to_string(core_fail) + " focused translations misbehaved");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok &= expect(secs < 60.0, "suite took " + std::to_string(secs) + "s (limit 60)");
  return ok;
}

bool criterion4_agreement() {
  bool ok = true;
  const fun::Program& lib = gen_library();
  FreshSupply lib_fresh = make_supply(lib);
  SimplifyProgramResult core_lib =
      simplify_program(focus_program(translate_program(lib, lib_fresh)));

  int disagree = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    fun::TermPtr t = gen_typed_term(0xabcd0000ull + i, {}, t_int(), 4);

    fun::EvalResult direct = fun::eval(lib, t, 100000, false);

    FreshSupply fresh = make_supply(t);
    core::ProducerPtr prd = focus_producer(translate_term(t, fresh), fresh);
    core::StatementPtr stmt =
        simplify(core::mks(core::Cut{prd, core::mkc(core::Covar{core::kStar})})).stmt;
    core::CoreEvalResult via =
        core::eval_stmt(core_lib.prog, stmt, core::Strategy::Cbv, 100000, false);

    bool same = direct.status == RunStatus::Ok && via.status == RunStatus::Ok &&
                fun::show_term(direct.final_term) == core::show_producer(via.value);
    if (!same && disagree++ == 0)
      note("first disagreement at seed " + std::to_string(i) + ": Fun " +
           (direct.status == RunStatus::Ok ? fun::show_term(direct.final_term) : "<no value>") +
           " vs Core " +
           (via.status == RunStatus::Ok ? core::show_producer(via.value) : "<no value>"));
  }
  ok &= expect(disagree == 0, std::to_string(disagree) + " of 500 terms disagreed");
  return ok;
}

bool criterion5_case_of_case() {
  const char* outer_first =
      "case (case Cons(1, Nil) of { Nil => Nil, Cons(h, t) => Cons(2, Nil) }) of "
      "{ Nil => 4, Cons(h2, t2) => 5 }";
  const char* pushed_in =
      "case Cons(1, Nil) of "
      "{ Nil => case Nil of { Nil => 4, Cons(h2, t2) => 5 }, "
      "Cons(h, t) => case Cons(2, Nil) of { Nil => 4, Cons(h2, t2) => 5 } }";

  auto simplified = [](const char* src) {
    fun::TermPtr t = fterm(src);
    FreshSupply fresh = make_supply(t);
    core::ProducerPtr prd = translate_term(t, fresh);
    return simplify(core::mks(core::Cut{prd, core::mkc(core::Covar{core::kStar})})).stmt;
  };
  core::StatementPtr a = simplified(outer_first);
  core::StatementPtr b = simplified(pushed_in);
  return expect(alpha_eq(a, b), "the two case-of-case forms do not simplify to the same "
                                "statement:\n  " +
                                    core::show_statement(a) + "\n  " + core::show_statement(b));
}

bool criterion6_strategy_split() {
  bool ok = true;
  core::CoreProgram none;

  core::StatementPtr crit = cstmt("< mu b. *(1, 1; b) | mu~ y. < 7 | star > >");
  core::CoreOutcome cv = core::step_stmt(none, crit, core::Strategy::Cbv);
  core::CoreOutcome cn = core::step_stmt(none, crit, core::Strategy::Cbn);
  ok &= expect(cv.kind == core::CoreOutcome::Stepped && cv.rule == "mu" &&
                   alpha_eq(cv.next, cstmt("*(1, 1; mu~ y. < 7 | star >)")),
               "critical pair under cbv");
  ok &= expect(cn.kind == core::CoreOutcome::Stepped && cn.rule == "mu-tilde" &&
                   alpha_eq(cn.next, cstmt("< 7 | star >")),
               "critical pair under cbn");

  core::StatementPtr eta = cstmt(
      "< cocase { ap(x; a) => < mu b. *(1, 1; b) | ap(x; a) > } | mu~ y. < 7 | star > >");
  core::CoreOutcome ev = core::step_stmt(none, eta, core::Strategy::Cbv);
  core::CoreOutcome en = core::step_stmt(none, eta, core::Strategy::Cbn);
  ok &= expect(ev.kind == core::CoreOutcome::Stepped && ev.rule == "mu-tilde" &&
                   alpha_eq(ev.next, cstmt("< 7 | star >")),
               "expanded pair under cbv");
  ok &= expect(en.kind == core::CoreOutcome::Stepped && en.rule == "mu-tilde" &&
                   alpha_eq(en.next, cstmt("< 7 | star >")),
               "expanded pair under cbn");
  return ok;
}

bool criterion7_control(const std::string& dir) {
  bool ok = true;
  fun::Program none;

  ok &= expect(run_fun(none, fterm("label a { 5 }")) == "5", "label a { 5 } did not run to 5");
  ok &= expect(run_fun(none, fterm("label a { goto(3; a) + 1 }")) == "3",
               "label a { goto(3; a) + 1 } did not run to 3");

  fun::Program mult = fprog(slurp(dir + "/mult.fun"));
  fun::check_program(mult);
  std::vector<std::string> rules;
  ok &= expect(run_fun(mult, mult.main, &rules) == "0", "mult([1, 0, 5]) did not run to 0");
  bool seen_zero = false;
  bool mul_after_zero = false;
  for (auto& r : rules) {
    if (r == "ifz-zero") seen_zero = true;
    else if (seen_zero && r == "binop") mul_after_zero = true;
  }
  ok &= expect(seen_zero, "trace never scrutinized a zero");
  ok &= expect(!mul_after_zero, "a multiplication happened after the zero was scrutinized");
  return ok;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <programs-dir>\n");
    return 2;
  }
  std::string dir = argv[1];

  try {
    report(1, "golden evaluations", criterion1_goldens());
    report(2, "translation goldens", criterion2_translation(dir));
    report(3, "typed-term property suites", criterion3_theorems());
    report(4, "semantic agreement of Fun and Core", criterion4_agreement());
    report(5, "case-of-case commuting conversion", criterion5_case_of_case());
    report(6, "strategy split of the critical pair", criterion6_strategy_split());
    report(7, "control operator semantics", criterion7_control(dir));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fatal: %s\n", e.what());
    return 2;
  }

  return g_failures == 0 ? 0 : 1;
}
