#include "funcore/core/typing.hpp"

#include "funcore/core/printer.hpp"

namespace funcore::core {

namespace {

const CoreDefinition* find_def(const CoreProgram& p, const std::string& name) {
  for (auto& d : p.defs)
    if (d.name == name) return &d;
  return nullptr;
}

struct Checker {
  const CoreProgram& prog;
  std::vector<TypePtr> sols; // metavariable solutions, indexed by id

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

  void checkP(const TypingContext& ctx, const ProducerPtr& p, const TypePtr& ty) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, PVar>) {
            const Binding* b = ctx.lookup(n.name, Mode::Prd);
            if (!b)
              throw TypeError(TypeErrorKind::UnboundVariable, "unbound variable " + n.name);
            unify(ty, b->type);
          } else if constexpr (std::is_same_v<N, PLit>) {
            unify(ty, t_int());
          } else if constexpr (std::is_same_v<N, Mu>) {
            TypingContext c2 = ctx;
            c2.bind(n.covar, Mode::Cns, ty);
            checkS(c2, n.body);
          } else if constexpr (std::is_same_v<N, CtorApp>) {
            if (!n.coargs.empty())
              throw TypeError(TypeErrorKind::ArityMismatch,
                              "constructors take no consumer arguments");
            if ((int)n.args.size() != ctor_arity(n.ctor))
              throw TypeError(TypeErrorKind::ArityMismatch,
                              "wrong argument count for " + std::string(to_string(n.ctor)));
            if (n.ctor == Ctor::Nil) {
              unify(ty, t_list(fresh()));
            } else if (n.ctor == Ctor::Cons) {
              TypePtr e = fresh();
              unify(ty, t_list(e));
              checkP(ctx, n.args[0], e);
              checkP(ctx, n.args[1], t_list(e));
            } else {
              TypePtr a = fresh(), b = fresh();
              unify(ty, t_pair(a, b));
              checkP(ctx, n.args[0], a);
              checkP(ctx, n.args[1], b);
            }
          } else if constexpr (std::is_same_v<N, CocaseP>) {
            checkCocase(ctx, n, ty, p);
          }
        },
        p->node);
  }

  static bool has_clause(const CocaseP& n, Dtor d) {
    for (auto& cl : n.clauses)
      if (cl.dtor == d) return true;
    return false;
  }
  const CocaseClause& get_clause(const CocaseP& n, Dtor d) {
    for (auto& cl : n.clauses)
      if (cl.dtor == d) return cl;
    throw TypeError(TypeErrorKind::BadClauses, "missing cocase clause");
  }

  void clause_arity(size_t binders, size_t cobinders, Dtor d) {
    if ((int)binders != dtor_prd_arity(d) || (int)cobinders != dtor_cns_arity(d))
      throw TypeError(TypeErrorKind::ArityMismatch,
                      "wrong binder count in clause " + std::string(to_string(d)));
  }

  void checkCocase(const TypingContext& ctx, const CocaseP& n, const TypePtr& ty,
                   const ProducerPtr& at) {
    for (auto& cl : n.clauses) clause_arity(cl.binders.size(), cl.cobinders.size(), cl.dtor);
    if (n.clauses.size() == 2 && has_clause(n, Dtor::Hd) && has_clause(n, Dtor::Tl)) {
      TypePtr e = fresh();
      unify(ty, t_stream(e));
      const CocaseClause& hd = get_clause(n, Dtor::Hd);
      const CocaseClause& tl = get_clause(n, Dtor::Tl);
      TypingContext c1 = ctx;
      c1.bind(hd.cobinders[0], Mode::Cns, e);
      checkS(c1, hd.body);
      TypingContext c2 = ctx;
      c2.bind(tl.cobinders[0], Mode::Cns, t_stream(e));
      checkS(c2, tl.body);
      return;
    }
    if (n.clauses.size() == 2 && has_clause(n, Dtor::Fst) && has_clause(n, Dtor::Snd)) {
      TypePtr a = fresh(), b = fresh();
      unify(ty, t_lpair(a, b));
      const CocaseClause& fst = get_clause(n, Dtor::Fst);
      const CocaseClause& snd = get_clause(n, Dtor::Snd);
      TypingContext c1 = ctx;
      c1.bind(fst.cobinders[0], Mode::Cns, a);
      checkS(c1, fst.body);
      TypingContext c2 = ctx;
      c2.bind(snd.cobinders[0], Mode::Cns, b);
      checkS(c2, snd.body);
      return;
    }
    if (n.clauses.size() == 1 && has_clause(n, Dtor::Ap)) {
      TypePtr a = fresh(), b = fresh();
      unify(ty, t_arrow(a, b));
      const CocaseClause& ap = get_clause(n, Dtor::Ap);
      TypingContext c2 = ctx;
      c2.bind(ap.binders[0], Mode::Prd, a);
      c2.bind(ap.cobinders[0], Mode::Cns, b);
      checkS(c2, ap.body);
      return;
    }
    throw TypeError(TypeErrorKind::BadClauses,
                    "cocase clauses do not match a codata type: " + show_producer(at));
  }

  void checkC(const TypingContext& ctx, const ConsumerPtr& c, const TypePtr& ty) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Covar>) {
            const Binding* b = ctx.lookup(n.name, Mode::Cns);
            if (!b)
              throw TypeError(TypeErrorKind::UnboundCovariable,
                              "unbound covariable " + n.name);
            unify(ty, b->type);
          } else if constexpr (std::is_same_v<N, MuTilde>) {
            TypingContext c2 = ctx;
            c2.bind(n.var, Mode::Prd, ty);
            checkS(c2, n.body);
          } else if constexpr (std::is_same_v<N, CaseC>) {
            checkCase(ctx, n, ty, c);
          } else {
            if ((int)n.args.size() != dtor_prd_arity(n.dtor) ||
                (int)n.coargs.size() != dtor_cns_arity(n.dtor))
              throw TypeError(TypeErrorKind::ArityMismatch,
                              "wrong argument count for " + std::string(to_string(n.dtor)));
            switch (n.dtor) {
              case Dtor::Hd: {
                TypePtr e = fresh();
                unify(ty, t_stream(e));
                checkC(ctx, n.coargs[0], e);
                break;
              }
              case Dtor::Tl: {
                TypePtr e = fresh();
                unify(ty, t_stream(e));
                checkC(ctx, n.coargs[0], t_stream(e));
                break;
              }
              case Dtor::Fst: {
                TypePtr a = fresh(), b = fresh();
                unify(ty, t_lpair(a, b));
                checkC(ctx, n.coargs[0], a);
                break;
              }
              case Dtor::Snd: {
                TypePtr a = fresh(), b = fresh();
                unify(ty, t_lpair(a, b));
                checkC(ctx, n.coargs[0], b);
                break;
              }
              case Dtor::Ap: {
                TypePtr a = fresh(), b = fresh();
                unify(ty, t_arrow(a, b));
                checkP(ctx, n.args[0], a);
                checkC(ctx, n.coargs[0], b);
                break;
              }
            }
          }
        },
        c->node);
  }

  void checkCase(const TypingContext& ctx, const CaseC& n, const TypePtr& ty,
                 const ConsumerPtr& at) {
    for (auto& cl : n.clauses) {
      if ((int)cl.binders.size() != ctor_arity(cl.ctor) || !cl.cobinders.empty())
        throw TypeError(TypeErrorKind::ArityMismatch,
                        "wrong binder count in clause " + std::string(to_string(cl.ctor)));
    }
    bool nil = false, cons = false, tup = false;
    for (auto& cl : n.clauses) {
      if (cl.ctor == Ctor::Nil) nil = true;
      if (cl.ctor == Ctor::Cons) cons = true;
      if (cl.ctor == Ctor::Tup) tup = true;
    }
    if (n.clauses.size() == 2 && nil && cons) {
      TypePtr e = fresh();
      unify(ty, t_list(e));
      for (auto& cl : n.clauses) {
        TypingContext c2 = ctx;
        if (cl.ctor == Ctor::Cons) {
          c2.bind(cl.binders[0], Mode::Prd, e);
          c2.bind(cl.binders[1], Mode::Prd, t_list(e));
        }
        checkS(c2, cl.body);
      }
      return;
    }
    if (n.clauses.size() == 1 && tup) {
      TypePtr a = fresh(), b = fresh();
      unify(ty, t_pair(a, b));
      TypingContext c2 = ctx;
      c2.bind(n.clauses[0].binders[0], Mode::Prd, a);
      c2.bind(n.clauses[0].binders[1], Mode::Prd, b);
      checkS(c2, n.clauses[0].body);
      return;
    }
    throw TypeError(TypeErrorKind::BadClauses,
                    "case clauses do not match a data type: " + show_consumer(at));
  }

  void checkS(const TypingContext& ctx, const StatementPtr& s) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Cut>) {
            TypePtr m = fresh();
            checkP(ctx, n.producer, m);
            checkC(ctx, n.consumer, m);
          } else if constexpr (std::is_same_v<N, OpStmt>) {
            checkP(ctx, n.lhs, t_int());
            checkP(ctx, n.rhs, t_int());
            checkC(ctx, n.after, t_int());
          } else if constexpr (std::is_same_v<N, IfZStmt>) {
            checkP(ctx, n.scrut, t_int());
            checkS(ctx, n.zero);
            checkS(ctx, n.nonzero);
          } else {
            const CoreDefinition* d = find_def(prog, n.name);
            if (!d)
              throw TypeError(TypeErrorKind::UnknownDefinition,
                              "unknown definition " + n.name);
            if (n.args.size() != d->params.size() || n.coargs.size() != d->coparams.size())
              throw TypeError(TypeErrorKind::ArityMismatch,
                              "wrong argument count in call to " + n.name);
            for (size_t i = 0; i < n.args.size(); ++i)
              checkP(ctx, n.args[i], d->params[i].type);
            for (size_t i = 0; i < n.coargs.size(); ++i)
              checkC(ctx, n.coargs[i], d->coparams[i].type);
          }
        },
        s->node);
  }
};

} // namespace

void check_producer(const TypingContext& ctx, const CoreProgram& p,
                    const ProducerPtr& prd, const TypePtr& ty) {
  Checker c{p, {}};
  c.checkP(ctx, prd, ty);
}

void check_consumer(const TypingContext& ctx, const CoreProgram& p,
                    const ConsumerPtr& cns, const TypePtr& ty) {
  Checker c{p, {}};
  c.checkC(ctx, cns, ty);
}

void check_statement(const TypingContext& ctx, const CoreProgram& p, const StatementPtr& s) {
  Checker c{p, {}};
  c.checkS(ctx, s);
}

void check_core_program(const CoreProgram& p) {
  for (size_t i = 0; i < p.defs.size(); ++i)
    for (size_t j = i + 1; j < p.defs.size(); ++j)
      if (p.defs[i].name == p.defs[j].name)
        throw TypeError(TypeErrorKind::BadClauses, "duplicate definition " + p.defs[i].name);
  for (auto& d : p.defs) {
    TypingContext ctx;
    for (auto& pa : d.params) ctx.bind(pa.name, Mode::Prd, pa.type);
    for (auto& pa : d.coparams) ctx.bind(pa.name, Mode::Cns, pa.type);
    try {
      check_statement(ctx, p, d.body);
    } catch (TypeError& e) {
      throw TypeError(e.kind, "in definition " + d.name + ": " + e.what());
    }
  }
  // The main runs against star at some result type; a metavariable lets the
  // statement itself determine it.
  try {
    if (p.main_stmt) {
      Checker c{p, {}};
      TypingContext ctx;
      ctx.bind(kStar, Mode::Cns, c.fresh());
      c.checkS(ctx, p.main_stmt);
    }
    if (p.main_prod) {
      Checker c{p, {}};
      c.checkP({}, p.main_prod, c.fresh());
    }
  } catch (TypeError& e) {
    throw TypeError(e.kind, "in main: " + std::string(e.what()));
  }
}

} // namespace funcore::core
