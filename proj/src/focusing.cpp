#include "funcore/focusing.hpp"

namespace funcore {

namespace fc = funcore::core;

namespace {

constexpr fc::Strategy kCbv = fc::Strategy::Cbv;

struct Focuser {
  FreshSupply& fresh;

  // Index of the leftmost non-value element, or -1.
  static int first_nonvalue(const std::vector<fc::ProducerPtr>& ps) {
    for (size_t i = 0; i < ps.size(); ++i)
      if (!fc::is_value(ps[i], kCbv)) return (int)i;
    return -1;
  }

  std::vector<fc::ProducerPtr> producers(const std::vector<fc::ProducerPtr>& ps) {
    std::vector<fc::ProducerPtr> out;
    for (auto& p : ps) out.push_back(producer(p));
    return out;
  }
  std::vector<fc::ConsumerPtr> consumers(const std::vector<fc::ConsumerPtr>& cs) {
    std::vector<fc::ConsumerPtr> out;
    for (auto& c : cs) out.push_back(consumer(c));
    return out;
  }

  fc::ProducerPtr producer(const fc::ProducerPtr& p) {
    return std::visit(
        [&](auto&& n) -> fc::ProducerPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, fc::PVar> || std::is_same_v<N, fc::PLit>) {
            return p;
          } else if constexpr (std::is_same_v<N, fc::Mu>) {
            return fc::mkp(fc::Mu{n.covar, statement(n.body)});
          } else if constexpr (std::is_same_v<N, fc::CtorApp>) {
            int i = first_nonvalue(n.args);
            if (i < 0) return fc::mkp(fc::CtorApp{n.ctor, producers(n.args), consumers(n.coargs)});
            std::string x = fresh.fresh_var();
            std::string a = fresh.fresh_covar();
            auto rest = n.args;
            rest[i] = fc::mkp(fc::PVar{x});
            return fc::mkp(fc::Mu{
                a, fc::mks(fc::Cut{
                       producer(n.args[i]),
                       fc::mkc(fc::MuTilde{
                           x, fc::mks(fc::Cut{producer(fc::mkp(fc::CtorApp{n.ctor, rest, n.coargs})),
                                              fc::mkc(fc::Covar{a})})})})});
          } else { // CocaseP
            std::vector<fc::CocaseClause> cls;
            for (auto& cl : n.clauses)
              cls.push_back({cl.dtor, cl.binders, cl.cobinders, statement(cl.body)});
            return fc::mkp(fc::CocaseP{cls});
          }
        },
        p->node);
  }

  fc::ConsumerPtr consumer(const fc::ConsumerPtr& c) {
    return std::visit(
        [&](auto&& n) -> fc::ConsumerPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, fc::Covar>) {
            return c;
          } else if constexpr (std::is_same_v<N, fc::MuTilde>) {
            return fc::mkc(fc::MuTilde{n.var, statement(n.body)});
          } else if constexpr (std::is_same_v<N, fc::CaseC>) {
            std::vector<fc::CaseClause> cls;
            for (auto& cl : n.clauses)
              cls.push_back({cl.ctor, cl.binders, cl.cobinders, statement(cl.body)});
            return fc::mkc(fc::CaseC{cls});
          } else { // DtorApp
            int i = first_nonvalue(n.args);
            if (i < 0) return fc::mkc(fc::DtorApp{n.dtor, producers(n.args), consumers(n.coargs)});
            std::string y = fresh.fresh_var();
            std::string x = fresh.fresh_var();
            auto rest = n.args;
            rest[i] = fc::mkp(fc::PVar{x});
            return fc::mkc(fc::MuTilde{
                y, fc::mks(fc::Cut{
                       producer(n.args[i]),
                       fc::mkc(fc::MuTilde{
                           x, fc::mks(fc::Cut{fc::mkp(fc::PVar{y}),
                                              consumer(fc::mkc(fc::DtorApp{n.dtor, rest,
                                                                           n.coargs}))})})})});
          }
        },
        c->node);
  }

  fc::StatementPtr statement(const fc::StatementPtr& s) {
    return std::visit(
        [&](auto&& n) -> fc::StatementPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, fc::Cut>) {
            return fc::mks(fc::Cut{producer(n.producer), consumer(n.consumer)});
          } else if constexpr (std::is_same_v<N, fc::OpStmt>) {
            if (!fc::is_value(n.lhs, kCbv)) {
              std::string x = fresh.fresh_var();
              return fc::mks(fc::Cut{
                  producer(n.lhs),
                  fc::mkc(fc::MuTilde{
                      x, statement(fc::mks(fc::OpStmt{n.op, fc::mkp(fc::PVar{x}), n.rhs,
                                                      n.after}))})});
            }
            if (!fc::is_value(n.rhs, kCbv)) {
              std::string x = fresh.fresh_var();
              return fc::mks(fc::Cut{
                  producer(n.rhs),
                  fc::mkc(fc::MuTilde{
                      x, statement(fc::mks(fc::OpStmt{n.op, n.lhs, fc::mkp(fc::PVar{x}),
                                                      n.after}))})});
            }
            return fc::mks(fc::OpStmt{n.op, producer(n.lhs), producer(n.rhs), consumer(n.after)});
          } else if constexpr (std::is_same_v<N, fc::IfZStmt>) {
            if (!fc::is_value(n.scrut, kCbv)) {
              std::string x = fresh.fresh_var();
              return fc::mks(fc::Cut{
                  producer(n.scrut),
                  fc::mkc(fc::MuTilde{
                      x, statement(fc::mks(fc::IfZStmt{fc::mkp(fc::PVar{x}), n.zero,
                                                       n.nonzero}))})});
            }
            return fc::mks(fc::IfZStmt{producer(n.scrut), statement(n.zero),
                                       statement(n.nonzero)});
          } else { // CallStmt
            int i = first_nonvalue(n.args);
            if (i < 0) return fc::mks(fc::CallStmt{n.name, producers(n.args), consumers(n.coargs)});
            std::string x = fresh.fresh_var();
            auto rest = n.args;
            rest[i] = fc::mkp(fc::PVar{x});
            return fc::mks(fc::Cut{
                producer(n.args[i]),
                fc::mkc(fc::MuTilde{
                    x, statement(fc::mks(fc::CallStmt{n.name, rest, n.coargs}))})});
          }
        },
        s->node);
  }
};

FreshSupply supply_for(const fc::StatementPtr& s) {
  FreshSupply f;
  fc::collect_names(s, f.reserved);
  f.reserved.insert(fc::kStar);
  return f;
}
FreshSupply supply_for(const fc::ProducerPtr& p) {
  FreshSupply f;
  fc::collect_names(p, f.reserved);
  f.reserved.insert(fc::kStar);
  return f;
}
FreshSupply supply_for(const fc::ConsumerPtr& c) {
  FreshSupply f;
  fc::collect_names(c, f.reserved);
  f.reserved.insert(fc::kStar);
  return f;
}

bool all_focused_values(const std::vector<fc::ProducerPtr>& ps) {
  for (auto& p : ps)
    if (!fc::is_value(p, kCbv) || !is_focused(p)) return false;
  return true;
}
bool all_focused(const std::vector<fc::ConsumerPtr>& cs) {
  for (auto& c : cs)
    if (!is_focused(c)) return false;
  return true;
}

} // namespace

fc::StatementPtr focus_statement(const fc::StatementPtr& s, FreshSupply& fresh) {
  return Focuser{fresh}.statement(s);
}
fc::ProducerPtr focus_producer(const fc::ProducerPtr& p, FreshSupply& fresh) {
  return Focuser{fresh}.producer(p);
}
fc::ConsumerPtr focus_consumer(const fc::ConsumerPtr& c, FreshSupply& fresh) {
  return Focuser{fresh}.consumer(c);
}

fc::StatementPtr focus_statement(const fc::StatementPtr& s) {
  FreshSupply f = supply_for(s);
  return focus_statement(s, f);
}
fc::ProducerPtr focus_producer(const fc::ProducerPtr& p) {
  FreshSupply f = supply_for(p);
  return focus_producer(p, f);
}
fc::ConsumerPtr focus_consumer(const fc::ConsumerPtr& c) {
  FreshSupply f = supply_for(c);
  return focus_consumer(c, f);
}

fc::CoreProgram focus_program(const fc::CoreProgram& p) {
  FreshSupply f;
  fc::collect_names(p, f.reserved);
  f.reserved.insert(fc::kStar);
  fc::CoreProgram out;
  for (auto& d : p.defs) {
    fc::CoreDefinition nd = d;
    nd.body = focus_statement(d.body, f);
    out.defs.push_back(std::move(nd));
  }
  if (p.main_stmt) out.main_stmt = focus_statement(p.main_stmt, f);
  if (p.main_prod) out.main_prod = focus_producer(p.main_prod, f);
  return out;
}

bool is_focused(const fc::ProducerPtr& p) {
  return std::visit(
      [&](auto&& n) -> bool {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, fc::PVar> || std::is_same_v<N, fc::PLit>) {
          return true;
        } else if constexpr (std::is_same_v<N, fc::Mu>) {
          return is_focused(n.body);
        } else if constexpr (std::is_same_v<N, fc::CtorApp>) {
          return all_focused_values(n.args) && all_focused(n.coargs);
        } else {
          for (auto& cl : n.clauses)
            if (!is_focused(cl.body)) return false;
          return true;
        }
      },
      p->node);
}

bool is_focused(const fc::ConsumerPtr& c) {
  return std::visit(
      [&](auto&& n) -> bool {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, fc::Covar>) {
          return true;
        } else if constexpr (std::is_same_v<N, fc::MuTilde>) {
          return is_focused(n.body);
        } else if constexpr (std::is_same_v<N, fc::CaseC>) {
          for (auto& cl : n.clauses)
            if (!is_focused(cl.body)) return false;
          return true;
        } else {
          return all_focused_values(n.args) && all_focused(n.coargs);
        }
      },
      c->node);
}

bool is_focused(const fc::StatementPtr& s) {
  return std::visit(
      [&](auto&& n) -> bool {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, fc::Cut>) {
          return is_focused(n.producer) && is_focused(n.consumer);
        } else if constexpr (std::is_same_v<N, fc::OpStmt>) {
          return fc::is_value(n.lhs, kCbv) && fc::is_value(n.rhs, kCbv) &&
                 is_focused(n.lhs) && is_focused(n.rhs) && is_focused(n.after);
        } else if constexpr (std::is_same_v<N, fc::IfZStmt>) {
          return fc::is_value(n.scrut, kCbv) && is_focused(n.scrut) &&
                 is_focused(n.zero) && is_focused(n.nonzero);
        } else {
          return all_focused_values(n.args) && all_focused(n.coargs);
        }
      },
      s->node);
}

bool is_focused(const fc::CoreProgram& p) {
  for (auto& d : p.defs)
    if (!is_focused(d.body)) return false;
  if (p.main_stmt && !is_focused(p.main_stmt)) return false;
  if (p.main_prod && !is_focused(p.main_prod)) return false;
  return true;
}

namespace {

// One top-down pass. Reductions at a node only create redexes inside it,
// and value-ness of producers is stable under simplification, so a single
// pass (reduce-at-node until done, then recurse) reaches a normal form.
struct Simplifier {
  long long fuel;
  bool complete = true;

  fc::StatementPtr stmt(fc::StatementPtr s) {
    for (;;) {
      const fc::Cut* cut = fc::as<fc::Cut>(s);
      if (!cut) break;
      if (const fc::Mu* m = fc::as<fc::Mu>(cut->producer)) {
        if (fuel <= 0) { complete = false; break; }
        --fuel;
        s = fc::subst(m->body, {}, {{m->covar, cut->consumer}});
        continue;
      }
      const fc::MuTilde* mt = fc::as<fc::MuTilde>(cut->consumer);
      if (mt && fc::is_value(cut->producer, kCbv)) {
        if (fuel <= 0) { complete = false; break; }
        --fuel;
        s = fc::subst(mt->body, {{mt->var, cut->producer}}, {});
        continue;
      }
      break;
    }
    return std::visit(
        [&](auto&& n) -> fc::StatementPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, fc::Cut>) {
            return fc::mks(fc::Cut{prod(n.producer), cons(n.consumer)});
          } else if constexpr (std::is_same_v<N, fc::OpStmt>) {
            return fc::mks(fc::OpStmt{n.op, prod(n.lhs), prod(n.rhs), cons(n.after)});
          } else if constexpr (std::is_same_v<N, fc::IfZStmt>) {
            return fc::mks(fc::IfZStmt{prod(n.scrut), stmt(n.zero), stmt(n.nonzero)});
          } else {
            std::vector<fc::ProducerPtr> args;
            for (auto& a : n.args) args.push_back(prod(a));
            std::vector<fc::ConsumerPtr> coargs;
            for (auto& c : n.coargs) coargs.push_back(cons(c));
            return fc::mks(fc::CallStmt{n.name, args, coargs});
          }
        },
        s->node);
  }

  fc::ProducerPtr prod(const fc::ProducerPtr& p) {
    return std::visit(
        [&](auto&& n) -> fc::ProducerPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, fc::Mu>) {
            return fc::mkp(fc::Mu{n.covar, stmt(n.body)});
          } else if constexpr (std::is_same_v<N, fc::CtorApp>) {
            std::vector<fc::ProducerPtr> args;
            for (auto& a : n.args) args.push_back(prod(a));
            std::vector<fc::ConsumerPtr> coargs;
            for (auto& c : n.coargs) coargs.push_back(cons(c));
            return fc::mkp(fc::CtorApp{n.ctor, args, coargs});
          } else if constexpr (std::is_same_v<N, fc::CocaseP>) {
            std::vector<fc::CocaseClause> cls;
            for (auto& cl : n.clauses)
              cls.push_back({cl.dtor, cl.binders, cl.cobinders, stmt(cl.body)});
            return fc::mkp(fc::CocaseP{cls});
          } else {
            return p;
          }
        },
        p->node);
  }

  fc::ConsumerPtr cons(const fc::ConsumerPtr& c) {
    return std::visit(
        [&](auto&& n) -> fc::ConsumerPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, fc::MuTilde>) {
            return fc::mkc(fc::MuTilde{n.var, stmt(n.body)});
          } else if constexpr (std::is_same_v<N, fc::CaseC>) {
            std::vector<fc::CaseClause> cls;
            for (auto& cl : n.clauses)
              cls.push_back({cl.ctor, cl.binders, cl.cobinders, stmt(cl.body)});
            return fc::mkc(fc::CaseC{cls});
          } else if constexpr (std::is_same_v<N, fc::DtorApp>) {
            std::vector<fc::ProducerPtr> args;
            for (auto& a : n.args) args.push_back(prod(a));
            std::vector<fc::ConsumerPtr> coargs;
            for (auto& co : n.coargs) coargs.push_back(cons(co));
            return fc::mkc(fc::DtorApp{n.dtor, args, coargs});
          } else {
            return c;
          }
        },
        c->node);
  }
};

} // namespace

SimplifyResult simplify(const fc::StatementPtr& s, long long fuel) {
  Simplifier sim{fuel};
  fc::StatementPtr out = sim.stmt(s);
  return {out, sim.complete};
}

SimplifyProgramResult simplify_program(const fc::CoreProgram& p, long long fuel) {
  SimplifyProgramResult res;
  for (auto& d : p.defs) {
    fc::CoreDefinition nd = d;
    SimplifyResult r = simplify(d.body, fuel);
    nd.body = r.stmt;
    res.complete = res.complete && r.complete;
    res.prog.defs.push_back(std::move(nd));
  }
  if (p.main_stmt) {
    SimplifyResult r = simplify(p.main_stmt, fuel);
    res.prog.main_stmt = r.stmt;
    res.complete = res.complete && r.complete;
  }
  if (p.main_prod) {
    Simplifier sim{fuel};
    res.prog.main_prod = sim.prod(p.main_prod);
    res.complete = res.complete && sim.complete;
  }
  return res;
}

} // namespace funcore
