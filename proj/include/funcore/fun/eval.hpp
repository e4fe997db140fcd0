#ifndef FUNCORE_FUN_EVAL_HPP
#define FUNCORE_FUN_EVAL_HPP

#include <optional>

#include "funcore/fun/ast.hpp"
#include "funcore/trace.hpp"

namespace funcore::fun {

struct Decomposition {
  EvalContext ctx;
  TermPtr redex;
};

// Unique decomposition t = E[r]; nullopt when t is a value. Decomposition
// stops at a label: the label term itself is the redex.
std::optional<Decomposition> decompose(const TermPtr& t);

struct StepOutcome {
  enum Kind { Stepped, IsValue, Stuck } kind;
  TermPtr term;       // for Stepped
  std::string rule;   // for Stepped
  std::string reason; // for Stuck
};

StepOutcome step(const Program& p, const TermPtr& t);

struct EvalResult {
  RunStatus status = RunStatus::Ok;
  TermPtr final_term;
  std::string reason;
  std::vector<TraceStep> steps;
};

// Strips ascriptions, then iterates step up to fuel times.
EvalResult eval(const Program& p, const TermPtr& t, long long fuel, bool want_trace);

} // namespace funcore::fun

#endif
