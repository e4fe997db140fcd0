#include "funcore/types.hpp"

namespace funcore {

namespace {
TypePtr make(TypeKind k, TypePtr a = nullptr, TypePtr b = nullptr, int id = -1) {
  auto t = std::make_shared<Type>();
  t->kind = k;
  t->a = std::move(a);
  t->b = std::move(b);
  t->meta_id = id;
  return t;
}
} // namespace

TypePtr t_int() {
  static TypePtr cached = make(TypeKind::Int);
  return cached;
}
TypePtr t_list(TypePtr elem) { return make(TypeKind::List, std::move(elem)); }
TypePtr t_pair(TypePtr fst, TypePtr snd) { return make(TypeKind::Pair, std::move(fst), std::move(snd)); }
TypePtr t_stream(TypePtr elem) { return make(TypeKind::Stream, std::move(elem)); }
TypePtr t_lpair(TypePtr fst, TypePtr snd) { return make(TypeKind::LPair, std::move(fst), std::move(snd)); }
TypePtr t_arrow(TypePtr arg, TypePtr res) { return make(TypeKind::Arrow, std::move(arg), std::move(res)); }
TypePtr t_meta(int id) { return make(TypeKind::Meta, nullptr, nullptr, id); }

bool type_eq(const TypePtr& x, const TypePtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case TypeKind::Int: return true;
    case TypeKind::Meta: return x->meta_id == y->meta_id;
    case TypeKind::List:
    case TypeKind::Stream: return type_eq(x->a, y->a);
    case TypeKind::Pair:
    case TypeKind::LPair:
    case TypeKind::Arrow: return type_eq(x->a, y->a) && type_eq(x->b, y->b);
  }
  return false;
}

std::string show_type(const TypePtr& t) {
  if (!t) return "<unknown>";
  switch (t->kind) {
    case TypeKind::Int: return "Int";
    case TypeKind::List: return "List(" + show_type(t->a) + ")";
    case TypeKind::Pair: return "Pair(" + show_type(t->a) + ", " + show_type(t->b) + ")";
    case TypeKind::Stream: return "Stream(" + show_type(t->a) + ")";
    case TypeKind::LPair: return "LPair(" + show_type(t->a) + ", " + show_type(t->b) + ")";
    case TypeKind::Arrow: return "(" + show_type(t->a) + " -> " + show_type(t->b) + ")";
    case TypeKind::Meta: return "?" + std::to_string(t->meta_id);
  }
  return "<unknown>";
}

} // namespace funcore
