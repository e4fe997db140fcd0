#ifndef FUNCORE_FOCUSING_HPP
#define FUNCORE_FOCUSING_HPP

#include "funcore/core/ast.hpp"
#include "funcore/translate.hpp"

namespace funcore {

// Static focusing: lifts non-value (cbv) arguments of constructors,
// destructors, binary operators, ifz and calls into mu~-bound cuts.
// Leftmost non-value argument is lifted first.
core::StatementPtr focus_statement(const core::StatementPtr& s, FreshSupply& fresh);
core::ProducerPtr focus_producer(const core::ProducerPtr& p, FreshSupply& fresh);
core::ConsumerPtr focus_consumer(const core::ConsumerPtr& c, FreshSupply& fresh);

// Convenience overloads that build their own fresh-name supply.
core::StatementPtr focus_statement(const core::StatementPtr& s);
core::ProducerPtr focus_producer(const core::ProducerPtr& p);
core::ConsumerPtr focus_consumer(const core::ConsumerPtr& c);

core::CoreProgram focus_program(const core::CoreProgram& p);

// True iff every ctor/dtor/binop/call producer argument and every ifz
// scrutinee is a cbv value, recursively.
bool is_focused(const core::StatementPtr& s);
bool is_focused(const core::ProducerPtr& p);
bool is_focused(const core::ConsumerPtr& c);
bool is_focused(const core::CoreProgram& p);

struct SimplifyResult {
  core::StatementPtr stmt;
  bool complete = true; // false when fuel ran out with redexes remaining
};

// Reduces administrative redexes:
//   < mu a. s | c >       -> s[c/a]        (any consumer c)
//   < v | mu~ x. s >      -> s[v/x]        (v a cbv value)
// at all positions. Duplicates the consumer into branches when it is a
// case; term size can grow.
SimplifyResult simplify(const core::StatementPtr& s, long long fuel = 10000);

struct SimplifyProgramResult {
  core::CoreProgram prog;
  bool complete = true;
};
SimplifyProgramResult simplify_program(const core::CoreProgram& p, long long fuel = 10000);

} // namespace funcore

#endif
