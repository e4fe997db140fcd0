#ifndef FUNCORE_H
#define FUNCORE_H

/* C interface to the funcore library. All functions are thread-compatible;
 * the last-error string is thread local. Strings returned as char* must be
 * released with fc_string_free; handles with their matching free function. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fc_fun_program fc_fun_program;
typedef struct fc_core_program fc_core_program;
typedef struct fc_run_result fc_run_result;

enum {
  FC_OK = 0,
  FC_ERR_USAGE = 1,
  FC_ERR_PARSE = 2,
  FC_ERR_TYPE = 3,
  FC_ERR_RUNTIME = 4,
};

/* Run result status values. */
enum {
  FC_RUN_OK = 0,
  FC_RUN_STUCK = 1,
  FC_RUN_FUEL = 2,
};

/* Message describing the most recent failure on this thread. */
const char* fc_last_error(void);

/* ---- surface language ---- */

/* NULL on parse error (see fc_last_error). */
fc_fun_program* fc_fun_parse(const char* src);
void fc_fun_free(fc_fun_program* p);

/* 1 when the program ends with a bare main term. */
int fc_fun_has_main(const fc_fun_program* p);

/* FC_OK or FC_ERR_TYPE. Checks every definition and, when present, the
 * main term (inferred; a control-only main falls back to checking at Int). */
int fc_fun_check(const fc_fun_program* p);

/* Evaluates the main term. NULL when there is no main. */
fc_run_result* fc_fun_run(const fc_fun_program* p, long long fuel, int want_trace);

/* Translation to the sequent core; optional focusing and administrative
 * redex simplification. */
fc_core_program* fc_fun_compile(const fc_fun_program* p, int do_focus, int do_simplify);

/* ---- sequent core ---- */

fc_core_program* fc_core_parse(const char* src);
void fc_core_free(fc_core_program* p);

int fc_core_check(const fc_core_program* p);

/* Pretty-printed program text. */
char* fc_core_print(const fc_core_program* p);

fc_core_program* fc_core_focus(const fc_core_program* p);

/* strategy: 0 call-by-value, 1 call-by-name. Runs the final statement, or
 * the final producer against star. NULL when the program has neither. */
fc_run_result* fc_core_run(const fc_core_program* p, int strategy, long long fuel,
                           int want_trace);

/* ---- run results ---- */

int fc_run_status(const fc_run_result* r);       /* FC_RUN_* */
const char* fc_run_result_str(const fc_run_result* r); /* printed final value/term */
const char* fc_run_reason(const fc_run_result* r);     /* stuck reason, may be "" */
char* fc_run_trace_json(const fc_run_result* r);
char* fc_run_trace_text(const fc_run_result* r);
void fc_run_free(fc_run_result* r);

void fc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
