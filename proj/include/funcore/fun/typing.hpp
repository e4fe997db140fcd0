#ifndef FUNCORE_FUN_TYPING_HPP
#define FUNCORE_FUN_TYPING_HPP

#include "funcore/fun/ast.hpp"
#include "funcore/types.hpp"

namespace funcore::fun {

// Bidirectional-lite discipline: most forms synthesize; goto, bare Nil and
// unannotated lambdas only check against an expected type. All functions
// throw TypeError on failure.
TypePtr infer(const TypingContext& ctx, const Program& p, const TermPtr& t);
void check(const TypingContext& ctx, const Program& p, const TermPtr& t, const TypePtr& ty);
void check_program(const Program& p);

// Types the context E by plugging a variable of type `hole` and inferring;
// returns the overall type.
TypePtr type_reified_context(const TypingContext& ctx, const Program& p,
                             const EvalContext& e, const TypePtr& hole);

} // namespace funcore::fun

#endif
