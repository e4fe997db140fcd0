#ifndef FUNCORE_GEN_HPP
#define FUNCORE_GEN_HPP

#include <cstdint>

#include "funcore/fun/ast.hpp"
#include "funcore/types.hpp"

namespace funcore {

// Fixed library of definitions that generated terms may call. Contains no
// unbounded recursion reachable from a finite term: `rep` is recursive but
// guarded by a cocase, so only explicit destructor chains unfold it.
const fun::Program& gen_library();

// Closed term of type tau built from introduction forms only. Streams are
// supported at element type Int (via the library's `rep`).
fun::TermPtr canonical_inhabitant(const TypePtr& tau);

// Deterministic in the seed. The result checks at tau in ctx against
// gen_library(); on a (never expected) failure of that gate the canonical
// inhabitant is returned instead.
fun::TermPtr gen_typed_term(std::uint64_t seed, const TypingContext& ctx,
                            const TypePtr& tau, int depth);

// A random type from the generator's universe (composites one level deep,
// streams only over Int).
TypePtr gen_type(std::uint64_t seed);

} // namespace funcore

#endif
