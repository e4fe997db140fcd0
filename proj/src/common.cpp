#include "funcore/common.hpp"

namespace funcore {

const char* to_string(BinOp op) {
  switch (op) {
    case BinOp::Mul: return "*";
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
  }
  return "?";
}

const char* to_string(Ctor k) {
  switch (k) {
    case Ctor::Nil: return "Nil";
    case Ctor::Cons: return "Cons";
    case Ctor::Tup: return "Tup";
  }
  return "?";
}

const char* to_string(Dtor d) {
  switch (d) {
    case Dtor::Hd: return "hd";
    case Dtor::Tl: return "tl";
    case Dtor::Fst: return "fst";
    case Dtor::Snd: return "snd";
    case Dtor::Ap: return "ap";
  }
  return "?";
}

long long apply_binop(BinOp op, long long lhs, long long rhs) {
  switch (op) {
    case BinOp::Mul: return lhs * rhs;
    case BinOp::Add: return lhs + rhs;
    case BinOp::Sub: return lhs - rhs;
  }
  return 0;
}

int ctor_arity(Ctor k) {
  switch (k) {
    case Ctor::Nil: return 0;
    case Ctor::Cons: return 2;
    case Ctor::Tup: return 2;
  }
  return 0;
}

int dtor_prd_arity(Dtor d) { return d == Dtor::Ap ? 1 : 0; }

int dtor_cns_arity(Dtor) { return 1; }

} // namespace funcore
