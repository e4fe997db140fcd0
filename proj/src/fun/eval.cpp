#include "funcore/fun/eval.hpp"

#include "funcore/fun/printer.hpp"

namespace funcore::fun {

namespace {

// Returns the index of the first non-value argument, or -1.
int first_nonvalue(const std::vector<TermPtr>& args) {
  for (size_t i = 0; i < args.size(); ++i)
    if (!is_value(args[i])) return (int)i;
  return -1;
}

} // namespace

std::optional<Decomposition> decompose(const TermPtr& t) {
  if (is_value(t)) return std::nullopt;
  EvalContext ctx;
  TermPtr cur = t;
  for (;;) {
    bool descended = std::visit(
        [&](auto&& n) -> bool {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Bin>) {
            if (!is_value(n.lhs)) {
              ctx.frames.push_back(FrameBinL{n.op, n.rhs});
              cur = n.lhs;
              return true;
            }
            if (!is_value(n.rhs)) {
              ctx.frames.push_back(FrameBinR{n.op, n.lhs});
              cur = n.rhs;
              return true;
            }
            return false;
          } else if constexpr (std::is_same_v<N, IfZ>) {
            if (!is_value(n.scrut)) {
              ctx.frames.push_back(FrameIfZ{n.zero, n.nonzero});
              cur = n.scrut;
              return true;
            }
            return false;
          } else if constexpr (std::is_same_v<N, Let>) {
            if (!is_value(n.bound)) {
              ctx.frames.push_back(FrameLet{n.binder, n.body});
              cur = n.bound;
              return true;
            }
            return false;
          } else if constexpr (std::is_same_v<N, Call>) {
            int i = first_nonvalue(n.args);
            if (i >= 0) {
              FrameCall f{n.name,
                          {n.args.begin(), n.args.begin() + i},
                          {n.args.begin() + i + 1, n.args.end()},
                          n.coargs};
              ctx.frames.push_back(std::move(f));
              cur = n.args[i];
              return true;
            }
            return false;
          } else if constexpr (std::is_same_v<N, Construct>) {
            int i = first_nonvalue(n.args);
            if (i >= 0) {
              FrameCtor f{n.ctor,
                          {n.args.begin(), n.args.begin() + i},
                          {n.args.begin() + i + 1, n.args.end()}};
              ctx.frames.push_back(std::move(f));
              cur = n.args[i];
              return true;
            }
            return false;
          } else if constexpr (std::is_same_v<N, Case>) {
            if (!is_value(n.scrut)) {
              ctx.frames.push_back(FrameCase{n.clauses});
              cur = n.scrut;
              return true;
            }
            return false;
          } else if constexpr (std::is_same_v<N, Destruct>) {
            if (!is_value(n.scrut)) {
              ctx.frames.push_back(FrameDtor{n.dtor});
              cur = n.scrut;
              return true;
            }
            return false;
          } else if constexpr (std::is_same_v<N, App>) {
            if (!is_value(n.fn)) {
              ctx.frames.push_back(FrameAppL{n.arg});
              cur = n.fn;
              return true;
            }
            if (!is_value(n.arg)) {
              ctx.frames.push_back(FrameAppR{n.fn});
              cur = n.arg;
              return true;
            }
            return false;
          } else if constexpr (std::is_same_v<N, Goto>) {
            if (!is_value(n.arg)) {
              ctx.frames.push_back(FrameGoto{n.target});
              cur = n.arg;
              return true;
            }
            return false;
          } else {
            // Var, Label, control operators, Ascribe: redex position.
            return false;
          }
        },
        cur->node);
    if (!descended) return Decomposition{std::move(ctx), cur};
  }
}

namespace {

const Definition* find_def(const Program& p, const std::string& name) {
  for (auto& d : p.defs)
    if (d.name == name) return &d;
  return nullptr;
}

StepOutcome stuck(const std::string& reason, const TermPtr& at) {
  return {StepOutcome::Stuck, nullptr, "", reason + ": " + show_term(at)};
}

} // namespace

StepOutcome step(const Program& p, const TermPtr& t) {
  auto d = decompose(t);
  if (!d) return {StepOutcome::IsValue, t, "", ""};
  const EvalContext& E = d->ctx;
  const TermPtr& r = d->redex;

  auto stepped = [&](TermPtr reduct, const char* rule) -> StepOutcome {
    return {StepOutcome::Stepped, plug(E, std::move(reduct)), rule, ""};
  };

  return std::visit(
      [&](auto&& n) -> StepOutcome {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var>) {
          return stuck("unbound variable", r);
        } else if constexpr (std::is_same_v<N, Bin>) {
          auto* l = as<Lit>(n.lhs);
          auto* rr = as<Lit>(n.rhs);
          if (!l || !rr) return stuck("operand is not an integer", r);
          return stepped(mk(Lit{apply_binop(n.op, l->value, rr->value)}), "binop");
        } else if constexpr (std::is_same_v<N, IfZ>) {
          auto* l = as<Lit>(n.scrut);
          if (!l) return stuck("ifz scrutinee is not an integer", r);
          if (l->value == 0) return stepped(n.zero, "ifz-zero");
          return stepped(n.nonzero, "ifz-nonzero");
        } else if constexpr (std::is_same_v<N, Let>) {
          return stepped(subst_var(n.body, n.binder, n.bound), "let");
        } else if constexpr (std::is_same_v<N, Call>) {
          const Definition* def = find_def(p, n.name);
          if (!def) return stuck("unknown definition", r);
          if (n.args.size() != def->params.size() || n.coargs.size() != def->coparams.size())
            return stuck("wrong argument count", r);
          std::map<std::string, TermPtr> vars;
          std::map<std::string, CoTarget> covars;
          for (size_t i = 0; i < n.args.size(); ++i) vars[def->params[i].name] = n.args[i];
          for (size_t i = 0; i < n.coargs.size(); ++i) covars[def->coparams[i].name] = n.coargs[i];
          return stepped(subst_multi(def->body, vars, covars), "call");
        } else if constexpr (std::is_same_v<N, Case>) {
          auto* c = as<Construct>(n.scrut);
          if (!c) return stuck("case scrutinee is not a constructor", r);
          for (auto& cl : n.clauses) {
            if (cl.ctor != c->ctor) continue;
            if (cl.binders.size() != c->args.size())
              return stuck("clause arity mismatch", r);
            std::map<std::string, TermPtr> vars;
            for (size_t i = 0; i < cl.binders.size(); ++i) vars[cl.binders[i]] = c->args[i];
            return stepped(subst_multi(cl.body, vars, {}), "case");
          }
          return stuck("no matching case clause", r);
        } else if constexpr (std::is_same_v<N, Destruct>) {
          auto* cc = as<Cocase>(n.scrut);
          if (!cc) return stuck("destructor on non-cocase", r);
          for (auto& cl : cc->clauses)
            if (cl.dtor == n.dtor) return stepped(cl.body, "cocase");
          return stuck("no matching cocase clause", r);
        } else if constexpr (std::is_same_v<N, App>) {
          auto* f = as<Lam>(n.fn);
          if (!f) return stuck("application of a non-function", r);
          return stepped(subst_var(f->body, f->binder, n.arg), "beta");
        } else if constexpr (std::is_same_v<N, Label>) {
          auto reified = std::make_shared<EvalContext>(E);
          TermPtr body = subst_covar(n.body, n.covar, CoTarget{"", reified});
          return {StepOutcome::Stepped, plug(E, body), "label", ""};
        } else if constexpr (std::is_same_v<N, Goto>) {
          if (n.target.is_covar()) return stuck("goto to an unresolved label", r);
          // The surrounding context is discarded; the reified one is resumed.
          return {StepOutcome::Stepped, plug(*n.target.ctx, n.arg), "goto", ""};
        } else if constexpr (std::is_same_v<N, Ascribe>) {
          return stepped(n.term, "ascribe");
        } else {
          return stuck("unsupported construct at runtime", r);
        }
      },
      r->node);
}

EvalResult eval(const Program& p, const TermPtr& t, long long fuel, bool want_trace) {
  EvalResult res;
  TermPtr cur = strip_ascriptions(t);
  for (long long i = 0; i < fuel; ++i) {
    StepOutcome out = step(p, cur);
    if (out.kind == StepOutcome::IsValue) {
      res.status = RunStatus::Ok;
      res.final_term = cur;
      return res;
    }
    if (out.kind == StepOutcome::Stuck) {
      res.status = RunStatus::Stuck;
      res.final_term = cur;
      res.reason = out.reason;
      return res;
    }
    cur = out.term;
    if (want_trace) res.steps.push_back({out.rule, show_term(cur)});
  }
  if (is_value(cur)) {
    res.status = RunStatus::Ok;
    res.final_term = cur;
    return res;
  }
  res.status = RunStatus::Fuel;
  res.final_term = cur;
  return res;
}

} // namespace funcore::fun
