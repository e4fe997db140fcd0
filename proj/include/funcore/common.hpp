#ifndef FUNCORE_COMMON_HPP
#define FUNCORE_COMMON_HPP

#include <string>

namespace funcore {

enum class BinOp { Mul, Add, Sub };

// Fixed constructor and destructor sets; there are no user type declarations.
enum class Ctor { Nil, Cons, Tup };
enum class Dtor { Hd, Tl, Fst, Snd, Ap };

const char* to_string(BinOp op);
const char* to_string(Ctor k);
const char* to_string(Dtor d);

long long apply_binop(BinOp op, long long lhs, long long rhs);

// Producer-argument arity of each constructor/destructor.
int ctor_arity(Ctor k);
int dtor_prd_arity(Dtor d);
int dtor_cns_arity(Dtor d);

} // namespace funcore

#endif
