#ifndef FUNCORE_CORE_TYPING_HPP
#define FUNCORE_CORE_TYPING_HPP

#include "funcore/core/ast.hpp"
#include "funcore/types.hpp"

namespace funcore::core {

// Directed checking against a supplied type. Cuts introduce an internal
// type metavariable that is solved by unification while walking both sides;
// callers never see metavariables. Throws TypeError.
void check_producer(const TypingContext& ctx, const CoreProgram& p,
                    const ProducerPtr& prd, const TypePtr& ty);
void check_consumer(const TypingContext& ctx, const CoreProgram& p,
                    const ConsumerPtr& cns, const TypePtr& ty);
void check_statement(const TypingContext& ctx, const CoreProgram& p, const StatementPtr& s);
void check_core_program(const CoreProgram& p);

} // namespace funcore::core

#endif
