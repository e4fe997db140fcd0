#include "funcore.h"

#include <cstring>
#include <string>

#include "funcore/core/eval.hpp"
#include "funcore/core/parser.hpp"
#include "funcore/core/printer.hpp"
#include "funcore/core/typing.hpp"
#include "funcore/focusing.hpp"
#include "funcore/fun/eval.hpp"
#include "funcore/fun/parser.hpp"
#include "funcore/fun/printer.hpp"
#include "funcore/fun/typing.hpp"
#include "funcore/trace.hpp"
#include "funcore/translate.hpp"

using namespace funcore;

struct fc_fun_program {
  fun::Program prog;
};
struct fc_core_program {
  core::CoreProgram prog;
};
struct fc_run_result {
  RunRecord rec;
};

namespace {

thread_local std::string g_err;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int run_status_code(RunStatus s) {
  switch (s) {
  case RunStatus::Ok: return FC_RUN_OK;
  case RunStatus::Stuck: return FC_RUN_STUCK;
  default: return FC_RUN_FUEL;
  }
}

// Mains are inferred; control constructs (goto) have no synthesized type,
// so fall back to checking at Int, the type of every printable result.
void check_main(const fun::Program& p) {
  try {
    fun::infer({}, p, p.main);
  } catch (const TypeError& e) {
    if (e.kind != TypeErrorKind::CannotInfer) throw;
    fun::check({}, p, p.main, t_int());
  }
}

} // namespace

extern "C" {

const char* fc_last_error(void) { return g_err.c_str(); }

fc_fun_program* fc_fun_parse(const char* src) {
  auto r = fun::parse_program(src ? src : "");
  if (auto* err = std::get_if<fun::ParseError>(&r)) {
    g_err = err->message();
    return nullptr;
  }
  return new fc_fun_program{std::get<fun::Program>(std::move(r))};
}

void fc_fun_free(fc_fun_program* p) { delete p; }

int fc_fun_has_main(const fc_fun_program* p) { return p && p->prog.main ? 1 : 0; }

int fc_fun_check(const fc_fun_program* p) {
  try {
    fun::check_program(p->prog);
    if (p->prog.main) check_main(p->prog);
    return FC_OK;
  } catch (const TypeError& e) {
    g_err = e.what();
    return FC_ERR_TYPE;
  }
}

fc_run_result* fc_fun_run(const fc_fun_program* p, long long fuel, int want_trace) {
  if (!p->prog.main) {
    g_err = "program has no main term";
    return nullptr;
  }
  fun::EvalResult r = fun::eval(p->prog, p->prog.main, fuel, want_trace != 0);
  RunRecord rec;
  rec.status = r.status;
  rec.result = fun::show_term(r.final_term);
  rec.reason = r.reason;
  rec.steps = std::move(r.steps);
  return new fc_run_result{std::move(rec)};
}

fc_core_program* fc_fun_compile(const fc_fun_program* p, int do_focus, int do_simplify) {
  try {
    FreshSupply supply = make_supply(p->prog);
    core::CoreProgram cp = translate_program(p->prog, supply);
    if (do_focus) cp = focus_program(cp);
    if (do_simplify) cp = simplify_program(cp).prog;
    return new fc_core_program{std::move(cp)};
  } catch (const std::exception& e) {
    g_err = e.what();
    return nullptr;
  }
}

fc_core_program* fc_core_parse(const char* src) {
  auto r = core::parse_core_program(src ? src : "");
  if (auto* err = std::get_if<core::ParseError>(&r)) {
    g_err = err->message();
    return nullptr;
  }
  return new fc_core_program{std::get<core::CoreProgram>(std::move(r))};
}

void fc_core_free(fc_core_program* p) { delete p; }

int fc_core_check(const fc_core_program* p) {
  try {
    core::check_core_program(p->prog);
    return FC_OK;
  } catch (const TypeError& e) {
    g_err = e.what();
    return FC_ERR_TYPE;
  }
}

char* fc_core_print(const fc_core_program* p) { return dup_string(core::show_program(p->prog)); }

fc_core_program* fc_core_focus(const fc_core_program* p) {
  return new fc_core_program{focus_program(p->prog)};
}

fc_run_result* fc_core_run(const fc_core_program* p, int strategy, long long fuel,
                           int want_trace) {
  core::Strategy st = strategy == 1 ? core::Strategy::Cbn : core::Strategy::Cbv;
  core::CoreEvalResult r;
  if (p->prog.main_stmt) {
    r = core::eval_stmt(p->prog, p->prog.main_stmt, st, fuel, want_trace != 0);
  } else if (p->prog.main_prod) {
    r = core::run_producer(p->prog, p->prog.main_prod, st, fuel, want_trace != 0);
  } else {
    g_err = "program has no main statement or producer";
    return nullptr;
  }
  RunRecord rec;
  rec.status = r.status;
  rec.result = r.value ? core::show_producer(r.value) : core::show_statement(r.final_stmt);
  rec.reason = r.reason;
  rec.steps = std::move(r.steps);
  return new fc_run_result{std::move(rec)};
}

int fc_run_status(const fc_run_result* r) { return run_status_code(r->rec.status); }
const char* fc_run_result_str(const fc_run_result* r) { return r->rec.result.c_str(); }
const char* fc_run_reason(const fc_run_result* r) { return r->rec.reason.c_str(); }
char* fc_run_trace_json(const fc_run_result* r) { return dup_string(trace_json(r->rec)); }
char* fc_run_trace_text(const fc_run_result* r) { return dup_string(trace_text(r->rec)); }
void fc_run_free(fc_run_result* r) { delete r; }

void fc_string_free(char* s) { delete[] s; }

} // extern "C"
