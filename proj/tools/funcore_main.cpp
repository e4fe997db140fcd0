#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "funcore.h"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int fail(int code, const char* tag, const std::string& msg) {
  std::cerr << tag << ": " << msg << "\n";
  return code;
}

struct FunHandle {
  fc_fun_program* p = nullptr;
  ~FunHandle() { fc_fun_free(p); }
};
struct CoreHandle {
  fc_core_program* p = nullptr;
  ~CoreHandle() { fc_core_free(p); }
};
struct RunHandle {
  fc_run_result* r = nullptr;
  ~RunHandle() { fc_run_free(r); }
};

int load_fun(const std::string& path, FunHandle& h) {
  std::string src;
  if (!read_file(path, src)) return fail(FC_ERR_USAGE, "usage-error", "cannot read " + path);
  h.p = fc_fun_parse(src.c_str());
  if (!h.p) return fail(FC_ERR_PARSE, "parse-error", fc_last_error());
  return FC_OK;
}

int load_core(const std::string& path, CoreHandle& h) {
  std::string src;
  if (!read_file(path, src)) return fail(FC_ERR_USAGE, "usage-error", "cannot read " + path);
  h.p = fc_core_parse(src.c_str());
  if (!h.p) return fail(FC_ERR_PARSE, "parse-error", fc_last_error());
  return FC_OK;
}

int report_run(fc_run_result* r, bool json, bool trace) {
  if (json) {
    char* s = fc_run_trace_json(r);
    std::cout << s << "\n";
    fc_string_free(s);
  } else {
    if (trace) {
      char* s = fc_run_trace_text(r);
      std::cout << s;
      fc_string_free(s);
    }
    std::cout << fc_run_result_str(r) << "\n";
  }
  int st = fc_run_status(r);
  if (st == FC_RUN_STUCK)
    return fail(FC_ERR_RUNTIME, "runtime-error", std::string("stuck: ") + fc_run_reason(r));
  if (st == FC_RUN_FUEL) return fail(FC_ERR_RUNTIME, "runtime-error", "out of fuel");
  return FC_OK;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"compiler toolkit for the Fun surface language and its sequent core"};
  app.require_subcommand(1);

  std::string file, out_path, strategy = "cbv";
  long long fuel = 100000;
  bool trace = false, json = false, do_focus = false, do_simplify = false;

  CLI::App* c_check = app.add_subcommand("check", "typecheck a .fun program");
  c_check->add_option("file", file)->required();

  CLI::App* c_run = app.add_subcommand("run", "evaluate the main term of a .fun program");
  c_run->add_option("file", file)->required();
  c_run->add_option("--fuel", fuel);
  c_run->add_flag("--trace", trace);
  c_run->add_flag("--json", json);

  CLI::App* c_compile = app.add_subcommand("compile", "translate a .fun program to core");
  c_compile->add_option("file", file)->required();
  c_compile->add_flag("--focus", do_focus);
  c_compile->add_flag("--simplify", do_simplify);
  c_compile->add_option("-o", out_path);

  CLI::App* c_checkc = app.add_subcommand("check-core", "typecheck a .core program");
  c_checkc->add_option("file", file)->required();

  CLI::App* c_runc = app.add_subcommand("run-core", "run a .core program");
  c_runc->add_option("file", file)->required();
  c_runc->add_option("--strategy", strategy)->check(CLI::IsMember({"cbv", "cbn"}));
  c_runc->add_option("--fuel", fuel);
  c_runc->add_flag("--trace", trace);
  c_runc->add_flag("--json", json);

  CLI::App* c_focus = app.add_subcommand("focus", "print the focused form of a .core program");
  c_focus->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    std::cerr << "usage-error: " << e.what() << "\n";
    return FC_ERR_USAGE;
  }

  if (c_check->parsed()) {
    FunHandle h;
    if (int rc = load_fun(file, h)) return rc;
    if (fc_fun_check(h.p) != FC_OK) return fail(FC_ERR_TYPE, "type-error", fc_last_error());
    std::cout << "ok\n";
    return FC_OK;
  }

  if (c_run->parsed()) {
    FunHandle h;
    if (int rc = load_fun(file, h)) return rc;
    if (!fc_fun_has_main(h.p))
      return fail(FC_ERR_USAGE, "usage-error", "program has no main term");
    if (fc_fun_check(h.p) != FC_OK) return fail(FC_ERR_TYPE, "type-error", fc_last_error());
    RunHandle r;
    r.r = fc_fun_run(h.p, fuel, trace || json);
    if (!r.r) return fail(FC_ERR_RUNTIME, "runtime-error", fc_last_error());
    return report_run(r.r, json, trace);
  }

  if (c_compile->parsed()) {
    FunHandle h;
    if (int rc = load_fun(file, h)) return rc;
    if (fc_fun_check(h.p) != FC_OK) return fail(FC_ERR_TYPE, "type-error", fc_last_error());
    CoreHandle c;
    c.p = fc_fun_compile(h.p, do_focus ? 1 : 0, do_simplify ? 1 : 0);
    if (!c.p) return fail(FC_ERR_RUNTIME, "runtime-error", fc_last_error());
    char* text = fc_core_print(c.p);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        fc_string_free(text);
        return fail(FC_ERR_USAGE, "usage-error", "cannot write " + out_path);
      }
      out << text;
    }
    fc_string_free(text);
    return FC_OK;
  }

  if (c_checkc->parsed()) {
    CoreHandle h;
    if (int rc = load_core(file, h)) return rc;
    if (fc_core_check(h.p) != FC_OK) return fail(FC_ERR_TYPE, "type-error", fc_last_error());
    std::cout << "ok\n";
    return FC_OK;
  }

  if (c_runc->parsed()) {
    CoreHandle h;
    if (int rc = load_core(file, h)) return rc;
    if (fc_core_check(h.p) != FC_OK) return fail(FC_ERR_TYPE, "type-error", fc_last_error());
    RunHandle r;
    r.r = fc_core_run(h.p, strategy == "cbn" ? 1 : 0, fuel, trace || json);
    if (!r.r) return fail(FC_ERR_USAGE, "usage-error", fc_last_error());
    return report_run(r.r, json, trace);
  }

  // focus
  CoreHandle h;
  if (int rc = load_core(file, h)) return rc;
  CoreHandle f;
  f.p = fc_core_focus(h.p);
  char* text = fc_core_print(f.p);
  std::cout << text;
  fc_string_free(text);
  return FC_OK;
}
