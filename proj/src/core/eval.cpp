#include "funcore/core/eval.hpp"

#include "funcore/core/printer.hpp"

namespace funcore::core {

namespace {

const CoreDefinition* find_def(const CoreProgram& p, const std::string& name) {
  for (auto& d : p.defs)
    if (d.name == name) return &d;
  return nullptr;
}

CoreOutcome stepped(StatementPtr s, const char* rule) {
  return {CoreOutcome::Stepped, std::move(s), rule, nullptr, ""};
}

CoreOutcome stuck(const std::string& reason) {
  return {CoreOutcome::Stuck, nullptr, "", nullptr, reason};
}

bool all_values(const std::vector<ProducerPtr>& ps, Strategy st) {
  for (auto& p : ps)
    if (!is_value(p, st)) return false;
  return true;
}

CoreOutcome step_cut(const CoreProgram&, const Cut& n, Strategy st, const std::string& top) {
  const ProducerPtr& p = n.producer;
  const ConsumerPtr& c = n.consumer;

  auto fire_mu = [&]() -> CoreOutcome {
    const Mu* m = as<Mu>(p);
    return stepped(subst(m->body, {}, {{m->covar, c}}), "mu");
  };
  auto fire_mutilde = [&]() -> CoreOutcome {
    const MuTilde* m = as<MuTilde>(c);
    return stepped(subst(m->body, {{m->var, p}}, {}), "mu-tilde");
  };

  // The critical pair <mu a. s1 | mu~ x. s2> resolves to mu under cbv and
  // to mu-tilde under cbn.
  if (st == Strategy::Cbv) {
    if (as<Mu>(p) && is_covalue(c, st)) return fire_mu();
  } else {
    if (as<MuTilde>(c) && is_value(p, st)) return fire_mutilde();
    if (as<Mu>(p) && is_covalue(c, st)) return fire_mu();
  }

  if (!is_value(p, st))
    return stuck("unfocused argument: producer is not a value in " +
                 show_statement(mks(Cut{p, c})));

  if (st == Strategy::Cbv && as<MuTilde>(c)) return fire_mutilde();

  if (const CaseC* cs = as<CaseC>(c)) {
    const CtorApp* k = as<CtorApp>(p);
    if (!k) return stuck("cut of a non-constructor against a case: " + show_producer(p));
    for (auto& cl : cs->clauses) {
      if (cl.ctor != k->ctor) continue;
      if (cl.binders.size() != k->args.size() || cl.cobinders.size() != k->coargs.size())
        return stuck("clause arity mismatch for " + std::string(to_string(k->ctor)));
      VarMap vm;
      CovarMap cm;
      for (size_t i = 0; i < cl.binders.size(); ++i) vm[cl.binders[i]] = k->args[i];
      for (size_t i = 0; i < cl.cobinders.size(); ++i) cm[cl.cobinders[i]] = k->coargs[i];
      return stepped(subst(cl.body, vm, cm), "case");
    }
    return stuck("no case clause for " + std::string(to_string(k->ctor)));
  }

  if (const DtorApp* d = as<DtorApp>(c)) {
    if (st == Strategy::Cbv && !all_values(d->args, st))
      return stuck("unfocused argument: destructor argument is not a value in " +
                   show_consumer(c));
    const CocaseP* cc = as<CocaseP>(p);
    if (!cc) return stuck("cut of a non-cocase against a destructor: " + show_producer(p));
    for (auto& cl : cc->clauses) {
      if (cl.dtor != d->dtor) continue;
      if (cl.binders.size() != d->args.size() || cl.cobinders.size() != d->coargs.size())
        return stuck("clause arity mismatch for " + std::string(to_string(d->dtor)));
      VarMap vm;
      CovarMap cm;
      for (size_t i = 0; i < cl.binders.size(); ++i) vm[cl.binders[i]] = d->args[i];
      for (size_t i = 0; i < cl.cobinders.size(); ++i) cm[cl.cobinders[i]] = d->coargs[i];
      return stepped(subst(cl.body, vm, cm), "cocase");
    }
    return stuck("no cocase clause for " + std::string(to_string(d->dtor)));
  }

  if (const Covar* cv = as<Covar>(c)) {
    if (cv->name == top) {
      NameSets free;
      free_names(p, free);
      if (free.covars.count(top))
        return stuck("terminal covariable occurs free in the result value");
      return {CoreOutcome::Terminal, nullptr, "", p, ""};
    }
    return stuck("cut against an unbound covariable " + cv->name);
  }

  return stuck("no rule applies to " + show_statement(mks(Cut{p, c})));
}

} // namespace

CoreOutcome step_stmt(const CoreProgram& p, const StatementPtr& s, Strategy st,
                      const std::string& top) {
  return std::visit(
      [&](auto&& n) -> CoreOutcome {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Cut>) {
          return step_cut(p, n, st, top);
        } else if constexpr (std::is_same_v<N, OpStmt>) {
          if (!is_value(n.lhs, st) || !is_value(n.rhs, st))
            return stuck("unfocused argument: operand is not a value in " + show_statement(s));
          const PLit* l = as<PLit>(n.lhs);
          const PLit* r = as<PLit>(n.rhs);
          if (!l || !r) return stuck("operand is not an integer in " + show_statement(s));
          return stepped(mks(Cut{mkp(PLit{apply_binop(n.op, l->value, r->value)}), n.after}),
                         "binop");
        } else if constexpr (std::is_same_v<N, IfZStmt>) {
          if (!is_value(n.scrut, st))
            return stuck("unfocused argument: scrutinee is not a value in " + show_statement(s));
          const PLit* l = as<PLit>(n.scrut);
          if (!l) return stuck("scrutinee is not an integer in " + show_statement(s));
          if (l->value == 0) return stepped(n.zero, "ifz-zero");
          return stepped(n.nonzero, "ifz-nonzero");
        } else {
          const CoreDefinition* d = find_def(p, n.name);
          if (!d) return stuck("unknown definition " + n.name);
          if (n.args.size() != d->params.size() || n.coargs.size() != d->coparams.size())
            return stuck("wrong argument count in call to " + n.name);
          if (!all_values(n.args, st))
            return stuck("unfocused argument: call argument is not a value in " +
                         show_statement(s));
          VarMap vm;
          CovarMap cm;
          for (size_t i = 0; i < n.args.size(); ++i) vm[d->params[i].name] = n.args[i];
          for (size_t i = 0; i < n.coargs.size(); ++i) cm[d->coparams[i].name] = n.coargs[i];
          return stepped(subst(d->body, vm, cm), "call");
        }
      },
      s->node);
}

CoreEvalResult eval_stmt(const CoreProgram& p, const StatementPtr& s, Strategy st,
                         long long fuel, bool want_trace, const std::string& top) {
  CoreEvalResult res;
  StatementPtr cur = s;
  for (long long i = 0; i < fuel; ++i) {
    CoreOutcome out = step_stmt(p, cur, st, top);
    if (out.kind == CoreOutcome::Terminal) {
      res.status = RunStatus::Ok;
      res.final_stmt = cur;
      res.value = out.value;
      return res;
    }
    if (out.kind == CoreOutcome::Stuck) {
      res.status = RunStatus::Stuck;
      res.final_stmt = cur;
      res.reason = out.reason;
      return res;
    }
    cur = out.next;
    if (want_trace) res.steps.push_back({out.rule, show_statement(cur)});
  }
  CoreOutcome out = step_stmt(p, cur, st, top);
  if (out.kind == CoreOutcome::Terminal) {
    res.status = RunStatus::Ok;
    res.final_stmt = cur;
    res.value = out.value;
    return res;
  }
  res.status = RunStatus::Fuel;
  res.final_stmt = cur;
  return res;
}

CoreEvalResult run_producer(const CoreProgram& p, const ProducerPtr& prd, Strategy st,
                            long long fuel, bool want_trace) {
  return eval_stmt(p, mks(Cut{prd, mkc(Covar{kStar})}), st, fuel, want_trace);
}

} // namespace funcore::core
