#include "funcore/fun/typing.hpp"

#include <algorithm>

#include "funcore/fun/printer.hpp"

namespace funcore::fun {

namespace {

constexpr const char* kHole = "\x01hole";

const Definition* find_def(const Program& p, const std::string& name) {
  for (auto& d : p.defs)
    if (d.name == name) return &d;
  return nullptr;
}

// Checking with internal type metavariables, solved by unification. The
// public entry points never expose a metavariable: inference fails with
// CannotInfer when the result is not fully determined.
struct Checker {
  const Program& prog;
  std::vector<TypePtr> sols;

  TypePtr fresh() {
    sols.push_back(nullptr);
    return t_meta((int)sols.size() - 1);
  }

  TypePtr resolve(TypePtr t) {
    while (t && t->kind == TypeKind::Meta && sols[t->meta_id]) t = sols[t->meta_id];
    return t;
  }

  TypePtr zonk(const TypePtr& t0) {
    TypePtr t = resolve(t0);
    if (!t) return t;
    switch (t->kind) {
      case TypeKind::List: return t_list(zonk(t->a));
      case TypeKind::Stream: return t_stream(zonk(t->a));
      case TypeKind::Pair: return t_pair(zonk(t->a), zonk(t->b));
      case TypeKind::LPair: return t_lpair(zonk(t->a), zonk(t->b));
      case TypeKind::Arrow: return t_arrow(zonk(t->a), zonk(t->b));
      default: return t;
    }
  }

  bool solved(const TypePtr& t0) {
    TypePtr t = resolve(t0);
    if (!t) return true;
    if (t->kind == TypeKind::Meta) return false;
    return solved(t->a) && solved(t->b);
  }

  bool occurs(int id, const TypePtr& t0) {
    TypePtr t = resolve(t0);
    if (!t) return false;
    if (t->kind == TypeKind::Meta) return t->meta_id == id;
    return occurs(id, t->a) || occurs(id, t->b);
  }

  void unify(const TypePtr& x0, const TypePtr& y0) {
    TypePtr x = resolve(x0), y = resolve(y0);
    if (x->kind == TypeKind::Meta && y->kind == TypeKind::Meta && x->meta_id == y->meta_id)
      return;
    if (x->kind == TypeKind::Meta) {
      if (occurs(x->meta_id, y))
        throw TypeError(TypeErrorKind::Mismatch, "infinite type while unifying");
      sols[x->meta_id] = y;
      return;
    }
    if (y->kind == TypeKind::Meta) {
      unify(y, x);
      return;
    }
    if (x->kind != y->kind)
      throw TypeError(TypeErrorKind::Mismatch, "type mismatch: expected " +
                                                   show_type(zonk(x)) + ", found " +
                                                   show_type(zonk(y)));
    switch (x->kind) {
      case TypeKind::Int: return;
      case TypeKind::List:
      case TypeKind::Stream:
        unify(x->a, y->a);
        return;
      default:
        unify(x->a, y->a);
        unify(x->b, y->b);
        return;
    }
  }

  TypePtr var_type(const TypingContext& ctx, const std::string& name) {
    const Binding* b = ctx.lookup(name, Mode::Prd);
    if (!b)
      throw TypeError(TypeErrorKind::UnboundVariable, "unbound variable " + name);
    if (!b->type)
      throw TypeError(TypeErrorKind::CannotInfer,
                      "cannot infer: type of " + name + " is not determined");
    return b->type;
  }

  TypePtr covar_type(const TypingContext& ctx, const std::string& name) {
    const Binding* b = ctx.lookup(name, Mode::Cns);
    if (!b)
      throw TypeError(TypeErrorKind::UnboundCovariable, "unbound covariable " + name);
    if (!b->type)
      throw TypeError(TypeErrorKind::CannotInfer,
                      "cannot infer: type of covariable " + name + " is not determined");
    return b->type;
  }

  void check_clause_set(const std::vector<CaseClause>& clauses,
                        std::initializer_list<Ctor> want, const TermPtr& t) {
    std::vector<Ctor> seen;
    for (auto& cl : clauses) {
      if (std::find(seen.begin(), seen.end(), cl.ctor) != seen.end())
        throw TypeError(TypeErrorKind::BadClauses,
                        "duplicate case clause in " + show_term(t));
      if (std::find(want.begin(), want.end(), cl.ctor) == want.end())
        throw TypeError(TypeErrorKind::BadClauses,
                        "unexpected clause " + std::string(to_string(cl.ctor)) + " in " + show_term(t));
      if ((int)cl.binders.size() != ctor_arity(cl.ctor))
        throw TypeError(TypeErrorKind::ArityMismatch,
                        "wrong binder count in clause " + std::string(to_string(cl.ctor)));
      seen.push_back(cl.ctor);
    }
    if (seen.size() != want.size())
      throw TypeError(TypeErrorKind::BadClauses, "missing case clause in " + show_term(t));
  }

  TypingContext clause_ctx(const TypingContext& ctx, const CaseClause& cl, const TypePtr& scrut_ty) {
    TypingContext c2 = ctx;
    if (cl.ctor == Ctor::Cons) {
      c2.bind(cl.binders[0], Mode::Prd, scrut_ty->a);
      c2.bind(cl.binders[1], Mode::Prd, t_list(scrut_ty->a));
    } else if (cl.ctor == Ctor::Tup) {
      c2.bind(cl.binders[0], Mode::Prd, scrut_ty->a);
      c2.bind(cl.binders[1], Mode::Prd, scrut_ty->b);
    }
    return c2;
  }

  const CocaseClause* find_cocase(const Cocase& n, Dtor d) {
    for (auto& cl : n.clauses)
      if (cl.dtor == d) return &cl;
    return nullptr;
  }

  void check_cocase_shape(const Cocase& n, const TermPtr& t, bool stream) {
    if (n.clauses.size() != 2)
      throw TypeError(TypeErrorKind::BadClauses, "cocase needs exactly two clauses in " + show_term(t));
    Dtor d0 = stream ? Dtor::Hd : Dtor::Fst;
    Dtor d1 = stream ? Dtor::Tl : Dtor::Snd;
    if (!find_cocase(n, d0) || !find_cocase(n, d1))
      throw TypeError(TypeErrorKind::BadClauses, "wrong cocase clauses in " + show_term(t));
  }

  // Type of E[hole] given the hole's type.
  TypePtr reified(const TypingContext& ctx, const EvalContext& e, const TypePtr& hole) {
    TypingContext c2 = ctx;
    c2.bind(kHole, Mode::Prd, hole);
    return infer(c2, plug(e, mk(Var{kHole})));
  }

  TypePtr infer(const TypingContext& ctx, const TermPtr& t) {
    return std::visit(
        [&](auto&& n) -> TypePtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Var>) {
            return var_type(ctx, n.name);
          } else if constexpr (std::is_same_v<N, Lit>) {
            return t_int();
          } else if constexpr (std::is_same_v<N, Bin>) {
            check(ctx, n.lhs, t_int());
            check(ctx, n.rhs, t_int());
            return t_int();
          } else if constexpr (std::is_same_v<N, IfZ>) {
            check(ctx, n.scrut, t_int());
            TypePtr j = fresh();
            check(ctx, n.zero, j);
            check(ctx, n.nonzero, j);
            return j;
          } else if constexpr (std::is_same_v<N, Let>) {
            TypePtr bound = infer(ctx, n.bound);
            TypingContext c2 = ctx;
            c2.bind(n.binder, Mode::Prd, bound);
            return infer(c2, n.body);
          } else if constexpr (std::is_same_v<N, Call>) {
            return infer_call(ctx, n);
          } else if constexpr (std::is_same_v<N, Construct>) {
            if ((int)n.args.size() != ctor_arity(n.ctor))
              throw TypeError(TypeErrorKind::ArityMismatch,
                              "wrong argument count for " + std::string(to_string(n.ctor)));
            if (n.ctor == Ctor::Nil) return t_list(fresh());
            if (n.ctor == Ctor::Cons) {
              TypePtr e = fresh();
              check(ctx, n.args[0], e);
              check(ctx, n.args[1], t_list(e));
              return t_list(e);
            }
            return t_pair(infer(ctx, n.args[0]), infer(ctx, n.args[1]));
          } else if constexpr (std::is_same_v<N, Case>) {
            TypePtr s = scrut_type(ctx, n.scrut, n.clauses, t);
            TypePtr j = fresh();
            for (auto& cl : n.clauses) check(clause_ctx(ctx, cl, s), cl.body, j);
            return j;
          } else if constexpr (std::is_same_v<N, Destruct>) {
            TypePtr s = infer(ctx, n.scrut);
            switch (n.dtor) {
              case Dtor::Hd: {
                TypePtr e = fresh();
                unify(t_stream(e), s);
                return e;
              }
              case Dtor::Tl: {
                unify(t_stream(fresh()), s);
                return resolve(s);
              }
              case Dtor::Fst: {
                TypePtr a = fresh(), b = fresh();
                unify(t_lpair(a, b), s);
                return a;
              }
              case Dtor::Snd: {
                TypePtr a = fresh(), b = fresh();
                unify(t_lpair(a, b), s);
                return b;
              }
              default:
                throw TypeError(TypeErrorKind::UnsupportedConstruct, "ap is not a surface destructor");
            }
          } else if constexpr (std::is_same_v<N, Cocase>) {
            if (find_cocase(n, Dtor::Hd) || find_cocase(n, Dtor::Tl)) {
              check_cocase_shape(n, t, true);
              TypePtr e = fresh();
              check(ctx, find_cocase(n, Dtor::Hd)->body, e);
              check(ctx, find_cocase(n, Dtor::Tl)->body, t_stream(e));
              return t_stream(e);
            }
            check_cocase_shape(n, t, false);
            TypePtr a = fresh(), b = fresh();
            check(ctx, find_cocase(n, Dtor::Fst)->body, a);
            check(ctx, find_cocase(n, Dtor::Snd)->body, b);
            return t_lpair(a, b);
          } else if constexpr (std::is_same_v<N, Lam>) {
            TypePtr a = n.annot ? n.annot : fresh();
            TypingContext c2 = ctx;
            c2.bind(n.binder, Mode::Prd, a);
            return t_arrow(a, infer(c2, n.body));
          } else if constexpr (std::is_same_v<N, App>) {
            TypePtr f = resolve(infer(ctx, n.fn));
            if (f->kind == TypeKind::Meta) {
              TypePtr a = fresh(), b = fresh();
              unify(f, t_arrow(a, b));
              check(ctx, n.arg, a);
              return b;
            }
            if (f->kind != TypeKind::Arrow)
              throw TypeError(TypeErrorKind::Mismatch,
                              "applied a non-function of type " + show_type(zonk(f)) +
                                  " in " + show_term(t));
            check(ctx, n.arg, f->a);
            return f->b;
          } else if constexpr (std::is_same_v<N, Label>) {
            TypePtr m = fresh();
            TypingContext c2 = ctx;
            c2.bind(n.covar, Mode::Cns, m);
            unify(m, infer(c2, n.body));
            return m;
          } else if constexpr (std::is_same_v<N, Goto>) {
            check_goto(ctx, n);
            return fresh(); // a jump never returns; any type fits
          } else if constexpr (std::is_same_v<N, Ascribe>) {
            check(ctx, n.term, n.type);
            return n.type;
          } else {
            throw TypeError(TypeErrorKind::UnsupportedConstruct,
                            "construct has no typing rule: " + show_term(t));
          }
        },
        t->node);
  }

  TypePtr scrut_type(const TypingContext& ctx, const TermPtr& scrut,
                     const std::vector<CaseClause>& clauses, const TermPtr& t) {
    TypePtr s = resolve(infer(ctx, scrut));
    if (s->kind == TypeKind::Meta) {
      // decide the data type from the clauses
      bool tup = !clauses.empty() && clauses[0].ctor == Ctor::Tup;
      TypePtr shape = tup ? t_pair(fresh(), fresh()) : t_list(fresh());
      unify(s, shape);
      s = resolve(s);
    }
    if (s->kind == TypeKind::List) check_clause_set(clauses, {Ctor::Nil, Ctor::Cons}, t);
    else if (s->kind == TypeKind::Pair) check_clause_set(clauses, {Ctor::Tup}, t);
    else
      throw TypeError(TypeErrorKind::Mismatch,
                      "case scrutinee has non-data type " + show_type(zonk(s)));
    return s;
  }

  TypePtr infer_call(const TypingContext& ctx, const Call& n) {
    const Definition* d = find_def(prog, n.name);
    if (!d)
      throw TypeError(TypeErrorKind::UnknownDefinition, "unknown definition " + n.name);
    if (n.args.size() != d->params.size() || n.coargs.size() != d->coparams.size())
      throw TypeError(TypeErrorKind::ArityMismatch,
                      "wrong argument count in call to " + n.name);
    for (size_t i = 0; i < n.args.size(); ++i) check(ctx, n.args[i], d->params[i].type);
    for (size_t i = 0; i < n.coargs.size(); ++i) {
      const TypePtr& want = d->coparams[i].type;
      if (n.coargs[i].is_covar())
        unify(want, covar_type(ctx, n.coargs[i].covar));
      else
        reified(ctx, *n.coargs[i].ctx, want);
    }
    return d->ret;
  }

  void check_goto(const TypingContext& ctx, const Goto& n) {
    if (n.target.is_covar()) {
      check(ctx, n.arg, covar_type(ctx, n.target.covar));
    } else {
      TypePtr arg = infer(ctx, n.arg);
      reified(ctx, *n.target.ctx, arg);
    }
  }

  void check(const TypingContext& ctx, const TermPtr& t, const TypePtr& ty) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Bin>) {
            unify(ty, t_int());
            check(ctx, n.lhs, t_int());
            check(ctx, n.rhs, t_int());
          } else if constexpr (std::is_same_v<N, IfZ>) {
            check(ctx, n.scrut, t_int());
            check(ctx, n.zero, ty);
            check(ctx, n.nonzero, ty);
          } else if constexpr (std::is_same_v<N, Let>) {
            TypePtr bound = infer(ctx, n.bound);
            TypingContext c2 = ctx;
            c2.bind(n.binder, Mode::Prd, bound);
            check(c2, n.body, ty);
          } else if constexpr (std::is_same_v<N, Construct>) {
            if ((int)n.args.size() != ctor_arity(n.ctor))
              throw TypeError(TypeErrorKind::ArityMismatch,
                              "wrong argument count for " + std::string(to_string(n.ctor)));
            if (n.ctor == Ctor::Nil) {
              unify(ty, t_list(fresh()));
            } else if (n.ctor == Ctor::Cons) {
              TypePtr e = fresh();
              unify(ty, t_list(e));
              check(ctx, n.args[0], e);
              check(ctx, n.args[1], t_list(e));
            } else {
              TypePtr a = fresh(), b = fresh();
              unify(ty, t_pair(a, b));
              check(ctx, n.args[0], a);
              check(ctx, n.args[1], b);
            }
          } else if constexpr (std::is_same_v<N, Case>) {
            TypePtr s = scrut_type(ctx, n.scrut, n.clauses, t);
            for (auto& cl : n.clauses) check(clause_ctx(ctx, cl, s), cl.body, ty);
          } else if constexpr (std::is_same_v<N, Destruct>) {
            switch (n.dtor) {
              case Dtor::Hd:
                check(ctx, n.scrut, t_stream(ty));
                break;
              case Dtor::Tl:
                unify(ty, t_stream(fresh()));
                check(ctx, n.scrut, ty);
                break;
              case Dtor::Fst:
                check(ctx, n.scrut, t_lpair(ty, fresh()));
                break;
              case Dtor::Snd:
                check(ctx, n.scrut, t_lpair(fresh(), ty));
                break;
              default:
                throw TypeError(TypeErrorKind::UnsupportedConstruct,
                                "ap is not a surface destructor");
            }
          } else if constexpr (std::is_same_v<N, Cocase>) {
            bool stream = find_cocase(n, Dtor::Hd) || find_cocase(n, Dtor::Tl);
            check_cocase_shape(n, t, stream);
            if (stream) {
              TypePtr e = fresh();
              unify(ty, t_stream(e));
              check(ctx, find_cocase(n, Dtor::Hd)->body, e);
              check(ctx, find_cocase(n, Dtor::Tl)->body, t_stream(e));
            } else {
              TypePtr a = fresh(), b = fresh();
              unify(ty, t_lpair(a, b));
              check(ctx, find_cocase(n, Dtor::Fst)->body, a);
              check(ctx, find_cocase(n, Dtor::Snd)->body, b);
            }
          } else if constexpr (std::is_same_v<N, Lam>) {
            TypePtr a = n.annot ? n.annot : fresh();
            TypePtr b = fresh();
            unify(ty, t_arrow(a, b));
            TypingContext c2 = ctx;
            c2.bind(n.binder, Mode::Prd, a);
            check(c2, n.body, b);
          } else if constexpr (std::is_same_v<N, App>) {
            TypePtr f = resolve(infer(ctx, n.fn));
            if (f->kind == TypeKind::Meta) {
              TypePtr a = fresh();
              unify(f, t_arrow(a, ty));
              check(ctx, n.arg, a);
            } else if (f->kind == TypeKind::Arrow) {
              check(ctx, n.arg, f->a);
              unify(ty, f->b);
            } else {
              throw TypeError(TypeErrorKind::Mismatch,
                              "applied a non-function of type " + show_type(zonk(f)) +
                                  " in " + show_term(t));
            }
          } else if constexpr (std::is_same_v<N, Label>) {
            TypingContext c2 = ctx;
            c2.bind(n.covar, Mode::Cns, ty);
            check(c2, n.body, ty);
          } else if constexpr (std::is_same_v<N, Goto>) {
            check_goto(ctx, n); // checks at any type: a jump never returns
          } else if constexpr (std::is_same_v<N, Ascribe>) {
            unify(ty, n.type);
            check(ctx, n.term, n.type);
          } else if constexpr (std::is_same_v<N, LetCC> || std::is_same_v<N, CallCC> ||
                               std::is_same_v<N, Control> || std::is_same_v<N, LabelTop>) {
            throw TypeError(TypeErrorKind::UnsupportedConstruct,
                            "construct has no typing rule: " + show_term(t));
          } else {
            unify(ty, infer(ctx, t));
          }
        },
        t->node);
  }
};

} // namespace

TypePtr infer(const TypingContext& ctx, const Program& p, const TermPtr& t) {
  Checker c{p, {}};
  TypePtr ty = c.infer(ctx, t);
  if (!c.solved(ty))
    throw TypeError(TypeErrorKind::CannotInfer,
                    "cannot fully infer the type of " + show_term(t) + "; add an ascription");
  return c.zonk(ty);
}

void check(const TypingContext& ctx, const Program& p, const TermPtr& t, const TypePtr& ty) {
  Checker c{p, {}};
  c.check(ctx, t, ty);
}

TypePtr type_reified_context(const TypingContext& ctx, const Program& p,
                             const EvalContext& e, const TypePtr& hole) {
  Checker c{p, {}};
  TypePtr ty = c.reified(ctx, e, hole);
  if (!c.solved(ty))
    throw TypeError(TypeErrorKind::CannotInfer,
                    "cannot fully infer the type of the reified context");
  return c.zonk(ty);
}

void check_program(const Program& p) {
  for (size_t i = 0; i < p.defs.size(); ++i)
    for (size_t j = i + 1; j < p.defs.size(); ++j)
      if (p.defs[i].name == p.defs[j].name)
        throw TypeError(TypeErrorKind::BadClauses, "duplicate definition " + p.defs[i].name);
  for (auto& d : p.defs) {
    std::set<std::string> names;
    for (auto& pa : d.params)
      if (!names.insert(pa.name).second)
        throw TypeError(TypeErrorKind::BadClauses,
                        "duplicate parameter " + pa.name + " in definition " + d.name);
    for (auto& pa : d.coparams)
      if (!names.insert(pa.name).second)
        throw TypeError(TypeErrorKind::BadClauses,
                        "duplicate parameter " + pa.name + " in definition " + d.name);
    TypingContext ctx;
    for (auto& pa : d.params) ctx.bind(pa.name, Mode::Prd, pa.type);
    for (auto& pa : d.coparams) ctx.bind(pa.name, Mode::Cns, pa.type);
    try {
      check(ctx, p, d.body, d.ret);
    } catch (TypeError& e) {
      throw TypeError(e.kind, "in definition " + d.name + ": " + e.what());
    }
  }
}

} // namespace funcore::fun
