#ifndef FUNCORE_CORE_EVAL_HPP
#define FUNCORE_CORE_EVAL_HPP

#include "funcore/core/ast.hpp"
#include "funcore/trace.hpp"

namespace funcore::core {

struct CoreOutcome {
  enum Kind { Stepped, Terminal, Stuck } kind;
  StatementPtr next;  // for Stepped
  std::string rule;   // for Stepped
  ProducerPtr value;  // for Terminal
  std::string reason; // for Stuck
};

// Rule names: mu, mu-tilde, binop, ifz-zero, ifz-nonzero, call, case, cocase.
CoreOutcome step_stmt(const CoreProgram& p, const StatementPtr& s, Strategy strategy,
                      const std::string& top = kStar);

struct CoreEvalResult {
  RunStatus status = RunStatus::Ok;
  StatementPtr final_stmt;
  ProducerPtr value; // terminal value when status == Ok
  std::string reason;
  std::vector<TraceStep> steps;
};

CoreEvalResult eval_stmt(const CoreProgram& p, const StatementPtr& s, Strategy strategy,
                         long long fuel, bool want_trace, const std::string& top = kStar);

// Evaluates < p | star >; star must not occur free in p.
CoreEvalResult run_producer(const CoreProgram& p, const ProducerPtr& prd, Strategy strategy,
                            long long fuel, bool want_trace);

} // namespace funcore::core

#endif
