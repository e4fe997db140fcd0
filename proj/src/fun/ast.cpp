#include "funcore/fun/ast.hpp"

#include <map>

namespace funcore::fun {

bool is_value(const TermPtr& t) {
  if (as<Lit>(t) || as<Cocase>(t) || as<Lam>(t)) return true;
  if (auto* c = as<Construct>(t)) {
    for (auto& a : c->args)
      if (!is_value(a)) return false;
    return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Free names

namespace {

struct FreeCollector {
  std::set<std::string>& vars;
  std::set<std::string>& covars;
  // Names bound in the enclosing term; tracked as multisets via counts.
  std::map<std::string, int> bound_vars;
  std::map<std::string, int> bound_covars;

  void var(const std::string& n) {
    auto it = bound_vars.find(n);
    if (it == bound_vars.end() || it->second == 0) vars.insert(n);
  }
  void covar(const std::string& n) {
    auto it = bound_covars.find(n);
    if (it == bound_covars.end() || it->second == 0) covars.insert(n);
  }

  void withVar(const std::string& n, auto f) {
    ++bound_vars[n];
    f();
    --bound_vars[n];
  }
  void withCovar(const std::string& n, auto f) {
    ++bound_covars[n];
    f();
    --bound_covars[n];
  }

  void target(const CoTarget& ct) {
    if (ct.is_covar()) covar(ct.covar);
    else context(*ct.ctx);
  }

  void context(const EvalContext& e) {
    for (auto& fr : e.frames) frame(fr);
  }

  void frame(const Frame& fr) {
    std::visit(
        [&](auto&& f) {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, FrameBinL>) term(f.rhs);
          else if constexpr (std::is_same_v<F, FrameBinR>) term(f.lhs);
          else if constexpr (std::is_same_v<F, FrameIfZ>) { term(f.zero); term(f.nonzero); }
          else if constexpr (std::is_same_v<F, FrameLet>) {
            withVar(f.binder, [&] { term(f.body); });
          } else if constexpr (std::is_same_v<F, FrameCall>) {
            for (auto& a : f.done) term(a);
            for (auto& a : f.pending) term(a);
            for (auto& c : f.coargs) target(c);
          } else if constexpr (std::is_same_v<F, FrameCtor>) {
            for (auto& a : f.done) term(a);
            for (auto& a : f.pending) term(a);
          } else if constexpr (std::is_same_v<F, FrameCase>) {
            clauses(f.clauses);
          } else if constexpr (std::is_same_v<F, FrameAppL>) term(f.arg);
          else if constexpr (std::is_same_v<F, FrameAppR>) term(f.fn);
          else if constexpr (std::is_same_v<F, FrameDtor>) { (void)f; }
          else if constexpr (std::is_same_v<F, FrameGoto>) target(f.target);
        },
        fr);
  }

  void clauses(const std::vector<CaseClause>& cs) {
    for (auto& cl : cs) {
      for (auto& b : cl.binders) ++bound_vars[b];
      term(cl.body);
      for (auto& b : cl.binders) --bound_vars[b];
    }
  }

  void term(const TermPtr& t) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Var>) var(n.name);
          else if constexpr (std::is_same_v<N, Lit>) { (void)n; }
          else if constexpr (std::is_same_v<N, Bin>) { term(n.lhs); term(n.rhs); }
          else if constexpr (std::is_same_v<N, IfZ>) { term(n.scrut); term(n.zero); term(n.nonzero); }
          else if constexpr (std::is_same_v<N, Let>) {
            term(n.bound);
            withVar(n.binder, [&] { term(n.body); });
          } else if constexpr (std::is_same_v<N, Call>) {
            for (auto& a : n.args) term(a);
            for (auto& c : n.coargs) target(c);
          } else if constexpr (std::is_same_v<N, Construct>) {
            for (auto& a : n.args) term(a);
          } else if constexpr (std::is_same_v<N, Case>) {
            term(n.scrut);
            clauses(n.clauses);
          } else if constexpr (std::is_same_v<N, Destruct>) term(n.scrut);
          else if constexpr (std::is_same_v<N, Cocase>) {
            for (auto& cl : n.clauses) term(cl.body);
          } else if constexpr (std::is_same_v<N, Lam>) {
            withVar(n.binder, [&] { term(n.body); });
          } else if constexpr (std::is_same_v<N, App>) { term(n.fn); term(n.arg); }
          else if constexpr (std::is_same_v<N, Label>) {
            withCovar(n.covar, [&] { term(n.body); });
          } else if constexpr (std::is_same_v<N, Goto>) {
            term(n.arg);
            target(n.target);
          } else if constexpr (std::is_same_v<N, LetCC>) {
            withVar(n.binder, [&] { term(n.body); });
          } else if constexpr (std::is_same_v<N, CallCC>) term(n.fn);
          else if constexpr (std::is_same_v<N, Control>) term(n.fn);
          else if constexpr (std::is_same_v<N, LabelTop>) {
            withCovar(n.covar, [&] { term(n.body); });
          } else if constexpr (std::is_same_v<N, Ascribe>) term(n.term);
        },
        t->node);
  }
};

} // namespace

void free_vars(const TermPtr& t, std::set<std::string>& out) {
  std::set<std::string> cv;
  FreeCollector fc{out, cv, {}, {}};
  fc.term(t);
}

void free_covars(const TermPtr& t, std::set<std::string>& out) {
  std::set<std::string> v;
  FreeCollector fc{v, out, {}, {}};
  fc.term(t);
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> s;
  free_vars(t, s);
  return s;
}

std::set<std::string> free_covars(const TermPtr& t) {
  std::set<std::string> s;
  free_covars(t, s);
  return s;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (int i = 0;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

struct Subst {
  std::map<std::string, TermPtr> vars;
  std::map<std::string, CoTarget> covars;

  bool empty() const { return vars.empty() && covars.empty(); }

  // Free names of all replacement images, split by namespace.
  std::set<std::string> image_vars() const {
    std::set<std::string> s;
    for (auto& [k, v] : vars) free_vars(v, s);
    for (auto& [k, v] : covars) {
      if (!v.is_covar()) {
        std::set<std::string> cv;
        FreeCollector fc{s, cv, {}, {}};
        fc.context(*v.ctx);
      }
    }
    return s;
  }
  std::set<std::string> image_covars() const {
    std::set<std::string> s;
    for (auto& [k, v] : vars) free_covars(v, s);
    for (auto& [k, v] : covars) {
      if (v.is_covar()) s.insert(v.covar);
      else {
        std::set<std::string> vs;
        FreeCollector fc{vs, s, {}, {}};
        fc.context(*v.ctx);
      }
    }
    return s;
  }
};

struct Substituter {
  // Descending under a binder removes it from the maps and, when it would
  // capture a free name of an image, renames it.
  static std::string bindVar(Subst& s, const std::string& name,
                             const std::set<std::string>& body_fv) {
    s.vars.erase(name);
    if (s.empty()) return name;
    auto imgs = s.image_vars();
    if (!imgs.count(name)) return name;
    std::set<std::string> avoid = imgs;
    avoid.insert(body_fv.begin(), body_fv.end());
    std::string renamed = fresh_name(name, avoid);
    s.vars[name] = mk(Var{renamed});
    return renamed;
  }
  static std::string bindCovar(Subst& s, const std::string& name,
                               const std::set<std::string>& body_fcv) {
    s.covars.erase(name);
    if (s.empty()) return name;
    auto imgs = s.image_covars();
    if (!imgs.count(name)) return name;
    std::set<std::string> avoid = imgs;
    avoid.insert(body_fcv.begin(), body_fcv.end());
    std::string renamed = fresh_name(name, avoid);
    s.covars[name] = CoTarget{renamed, nullptr};
    return renamed;
  }

  static CoTarget target(const CoTarget& ct, const Subst& s) {
    if (ct.is_covar()) {
      auto it = s.covars.find(ct.covar);
      if (it != s.covars.end()) return it->second;
      return ct;
    }
    auto ctx = std::make_shared<EvalContext>();
    ctx->frames.reserve(ct.ctx->frames.size());
    for (auto& fr : ct.ctx->frames) ctx->frames.push_back(frame(fr, s));
    return CoTarget{"", ctx};
  }

  static std::vector<TermPtr> terms(const std::vector<TermPtr>& ts, const Subst& s) {
    std::vector<TermPtr> out;
    out.reserve(ts.size());
    for (auto& t : ts) out.push_back(term(t, s));
    return out;
  }

  static std::vector<CaseClause> clauses(const std::vector<CaseClause>& cs, const Subst& s) {
    std::vector<CaseClause> out;
    out.reserve(cs.size());
    for (auto& cl : cs) {
      Subst s2 = s;
      std::set<std::string> body_fv = free_vars(cl.body);
      std::vector<std::string> binders = cl.binders;
      for (auto& b : binders) b = bindVar(s2, b, body_fv);
      out.push_back({cl.ctor, binders, term(cl.body, s2)});
    }
    return out;
  }

  static Frame frame(const Frame& fr, const Subst& s) {
    return std::visit(
        [&](auto&& f) -> Frame {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, FrameBinL>) return FrameBinL{f.op, term(f.rhs, s)};
          else if constexpr (std::is_same_v<F, FrameBinR>) return FrameBinR{f.op, term(f.lhs, s)};
          else if constexpr (std::is_same_v<F, FrameIfZ>) return FrameIfZ{term(f.zero, s), term(f.nonzero, s)};
          else if constexpr (std::is_same_v<F, FrameLet>) {
            Subst s2 = s;
            std::string b = bindVar(s2, f.binder, free_vars(f.body));
            return FrameLet{b, term(f.body, s2)};
          } else if constexpr (std::is_same_v<F, FrameCall>) {
            std::vector<CoTarget> cts;
            for (auto& c : f.coargs) cts.push_back(target(c, s));
            return FrameCall{f.name, terms(f.done, s), terms(f.pending, s), cts};
          } else if constexpr (std::is_same_v<F, FrameCtor>) {
            return FrameCtor{f.ctor, terms(f.done, s), terms(f.pending, s)};
          } else if constexpr (std::is_same_v<F, FrameCase>) {
            return FrameCase{clauses(f.clauses, s)};
          } else if constexpr (std::is_same_v<F, FrameAppL>) return FrameAppL{term(f.arg, s)};
          else if constexpr (std::is_same_v<F, FrameAppR>) return FrameAppR{term(f.fn, s)};
          else if constexpr (std::is_same_v<F, FrameDtor>) return f;
          else if constexpr (std::is_same_v<F, FrameGoto>) return FrameGoto{target(f.target, s)};
        },
        fr);
  }

  static TermPtr term(const TermPtr& t, const Subst& s) {
    if (s.empty()) return t;
    return std::visit(
        [&](auto&& n) -> TermPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Var>) {
            auto it = s.vars.find(n.name);
            if (it != s.vars.end()) return it->second;
            return t;
          } else if constexpr (std::is_same_v<N, Lit>) {
            return t;
          } else if constexpr (std::is_same_v<N, Bin>) {
            return mk(Bin{n.op, term(n.lhs, s), term(n.rhs, s)});
          } else if constexpr (std::is_same_v<N, IfZ>) {
            return mk(IfZ{term(n.scrut, s), term(n.zero, s), term(n.nonzero, s)});
          } else if constexpr (std::is_same_v<N, Let>) {
            TermPtr bound = term(n.bound, s);
            Subst s2 = s;
            std::string b = bindVar(s2, n.binder, free_vars(n.body));
            return mk(Let{b, bound, term(n.body, s2)});
          } else if constexpr (std::is_same_v<N, Call>) {
            std::vector<CoTarget> cts;
            for (auto& c : n.coargs) cts.push_back(target(c, s));
            return mk(Call{n.name, terms(n.args, s), cts});
          } else if constexpr (std::is_same_v<N, Construct>) {
            return mk(Construct{n.ctor, terms(n.args, s)});
          } else if constexpr (std::is_same_v<N, Case>) {
            return mk(Case{term(n.scrut, s), clauses(n.clauses, s)});
          } else if constexpr (std::is_same_v<N, Destruct>) {
            return mk(Destruct{term(n.scrut, s), n.dtor});
          } else if constexpr (std::is_same_v<N, Cocase>) {
            std::vector<CocaseClause> cls;
            for (auto& cl : n.clauses) cls.push_back({cl.dtor, term(cl.body, s)});
            return mk(Cocase{cls});
          } else if constexpr (std::is_same_v<N, Lam>) {
            Subst s2 = s;
            std::string b = bindVar(s2, n.binder, free_vars(n.body));
            return mk(Lam{b, n.annot, term(n.body, s2)});
          } else if constexpr (std::is_same_v<N, App>) {
            return mk(App{term(n.fn, s), term(n.arg, s)});
          } else if constexpr (std::is_same_v<N, Label>) {
            Subst s2 = s;
            std::string b = bindCovar(s2, n.covar, free_covars(n.body));
            return mk(Label{b, term(n.body, s2)});
          } else if constexpr (std::is_same_v<N, Goto>) {
            return mk(Goto{term(n.arg, s), target(n.target, s)});
          } else if constexpr (std::is_same_v<N, LetCC>) {
            Subst s2 = s;
            std::string b = bindVar(s2, n.binder, free_vars(n.body));
            return mk(LetCC{b, term(n.body, s2)});
          } else if constexpr (std::is_same_v<N, CallCC>) {
            return mk(CallCC{term(n.fn, s)});
          } else if constexpr (std::is_same_v<N, Control>) {
            return mk(Control{term(n.fn, s)});
          } else if constexpr (std::is_same_v<N, LabelTop>) {
            Subst s2 = s;
            std::string b = bindCovar(s2, n.covar, free_covars(n.body));
            return mk(LabelTop{b, term(n.body, s2)});
          } else if constexpr (std::is_same_v<N, Ascribe>) {
            return mk(Ascribe{term(n.term, s), n.type});
          }
        },
        t->node);
  }
};

} // namespace

TermPtr subst_var(const TermPtr& t, const std::string& name, const TermPtr& replacement) {
  Subst s;
  s.vars[name] = replacement;
  return Substituter::term(t, s);
}

TermPtr subst_covar(const TermPtr& t, const std::string& name, const CoTarget& replacement) {
  Subst s;
  s.covars[name] = replacement;
  return Substituter::term(t, s);
}

TermPtr subst_multi(const TermPtr& t, const std::map<std::string, TermPtr>& vars,
                    const std::map<std::string, CoTarget>& covars) {
  Subst s;
  s.vars = vars;
  s.covars = covars;
  return Substituter::term(t, s);
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace {

struct AlphaEq {
  // Parallel stacks of bound names; a name refers to its highest entry.
  std::vector<std::pair<std::string, std::string>> vars;
  std::vector<std::pair<std::string, std::string>> covars;

  static int find(const std::vector<std::pair<std::string, std::string>>& env,
                  const std::string& n, bool left) {
    for (int i = (int)env.size() - 1; i >= 0; --i)
      if ((left ? env[i].first : env[i].second) == n) return i;
    return -1;
  }

  bool varRef(const std::string& a, const std::string& b) {
    int ia = find(vars, a, true), ib = find(vars, b, false);
    if (ia != ib) return false;
    return ia >= 0 || a == b;
  }
  bool covarRef(const std::string& a, const std::string& b) {
    int ia = find(covars, a, true), ib = find(covars, b, false);
    if (ia != ib) return false;
    return ia >= 0 || a == b;
  }

  bool target(const CoTarget& a, const CoTarget& b) {
    if (a.is_covar() != b.is_covar()) return false;
    if (a.is_covar()) return covarRef(a.covar, b.covar);
    return context(*a.ctx, *b.ctx);
  }

  bool context(const EvalContext& a, const EvalContext& b) {
    if (a.frames.size() != b.frames.size()) return false;
    for (size_t i = 0; i < a.frames.size(); ++i)
      if (!frame(a.frames[i], b.frames[i])) return false;
    return true;
  }

  bool termsEq(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!term(a[i], b[i])) return false;
    return true;
  }

  bool clausesEq(const std::vector<CaseClause>& a, const std::vector<CaseClause>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].ctor != b[i].ctor) return false;
      if (a[i].binders.size() != b[i].binders.size()) return false;
      size_t mark = vars.size();
      for (size_t j = 0; j < a[i].binders.size(); ++j)
        vars.push_back({a[i].binders[j], b[i].binders[j]});
      bool ok = term(a[i].body, b[i].body);
      vars.resize(mark);
      if (!ok) return false;
    }
    return true;
  }

  bool frame(const Frame& fa, const Frame& fb) {
    if (fa.index() != fb.index()) return false;
    return std::visit(
        [&](auto&& a) -> bool {
          using F = std::decay_t<decltype(a)>;
          auto& b = std::get<F>(fb);
          if constexpr (std::is_same_v<F, FrameBinL>) return a.op == b.op && term(a.rhs, b.rhs);
          else if constexpr (std::is_same_v<F, FrameBinR>) return a.op == b.op && term(a.lhs, b.lhs);
          else if constexpr (std::is_same_v<F, FrameIfZ>) return term(a.zero, b.zero) && term(a.nonzero, b.nonzero);
          else if constexpr (std::is_same_v<F, FrameLet>) {
            vars.push_back({a.binder, b.binder});
            bool ok = term(a.body, b.body);
            vars.pop_back();
            return ok;
          } else if constexpr (std::is_same_v<F, FrameCall>) {
            if (a.name != b.name || a.coargs.size() != b.coargs.size()) return false;
            if (!termsEq(a.done, b.done) || !termsEq(a.pending, b.pending)) return false;
            for (size_t i = 0; i < a.coargs.size(); ++i)
              if (!target(a.coargs[i], b.coargs[i])) return false;
            return true;
          } else if constexpr (std::is_same_v<F, FrameCtor>) {
            return a.ctor == b.ctor && termsEq(a.done, b.done) && termsEq(a.pending, b.pending);
          } else if constexpr (std::is_same_v<F, FrameCase>) {
            return clausesEq(a.clauses, b.clauses);
          } else if constexpr (std::is_same_v<F, FrameAppL>) return term(a.arg, b.arg);
          else if constexpr (std::is_same_v<F, FrameAppR>) return term(a.fn, b.fn);
          else if constexpr (std::is_same_v<F, FrameDtor>) return a.dtor == b.dtor;
          else if constexpr (std::is_same_v<F, FrameGoto>) return target(a.target, b.target);
        },
        fa);
  }

  bool term(const TermPtr& x, const TermPtr& y) {
    if (x->node.index() != y->node.index()) return false;
    return std::visit(
        [&](auto&& a) -> bool {
          using N = std::decay_t<decltype(a)>;
          auto& b = std::get<N>(y->node);
          if constexpr (std::is_same_v<N, Var>) return varRef(a.name, b.name);
          else if constexpr (std::is_same_v<N, Lit>) return a.value == b.value;
          else if constexpr (std::is_same_v<N, Bin>) return a.op == b.op && term(a.lhs, b.lhs) && term(a.rhs, b.rhs);
          else if constexpr (std::is_same_v<N, IfZ>) return term(a.scrut, b.scrut) && term(a.zero, b.zero) && term(a.nonzero, b.nonzero);
          else if constexpr (std::is_same_v<N, Let>) {
            if (!term(a.bound, b.bound)) return false;
            vars.push_back({a.binder, b.binder});
            bool ok = term(a.body, b.body);
            vars.pop_back();
            return ok;
          } else if constexpr (std::is_same_v<N, Call>) {
            if (a.name != b.name || a.coargs.size() != b.coargs.size()) return false;
            if (!termsEq(a.args, b.args)) return false;
            for (size_t i = 0; i < a.coargs.size(); ++i)
              if (!target(a.coargs[i], b.coargs[i])) return false;
            return true;
          } else if constexpr (std::is_same_v<N, Construct>) {
            return a.ctor == b.ctor && termsEq(a.args, b.args);
          } else if constexpr (std::is_same_v<N, Case>) {
            return term(a.scrut, b.scrut) && clausesEq(a.clauses, b.clauses);
          } else if constexpr (std::is_same_v<N, Destruct>) {
            return a.dtor == b.dtor && term(a.scrut, b.scrut);
          } else if constexpr (std::is_same_v<N, Cocase>) {
            if (a.clauses.size() != b.clauses.size()) return false;
            for (size_t i = 0; i < a.clauses.size(); ++i) {
              if (a.clauses[i].dtor != b.clauses[i].dtor) return false;
              if (!term(a.clauses[i].body, b.clauses[i].body)) return false;
            }
            return true;
          } else if constexpr (std::is_same_v<N, Lam>) {
            vars.push_back({a.binder, b.binder});
            bool ok = term(a.body, b.body);
            vars.pop_back();
            return ok;
          } else if constexpr (std::is_same_v<N, App>) {
            return term(a.fn, b.fn) && term(a.arg, b.arg);
          } else if constexpr (std::is_same_v<N, Label> || std::is_same_v<N, LabelTop>) {
            covars.push_back({a.covar, b.covar});
            bool ok = term(a.body, b.body);
            covars.pop_back();
            return ok;
          } else if constexpr (std::is_same_v<N, Goto>) {
            return term(a.arg, b.arg) && target(a.target, b.target);
          } else if constexpr (std::is_same_v<N, LetCC>) {
            vars.push_back({a.binder, b.binder});
            bool ok = term(a.body, b.body);
            vars.pop_back();
            return ok;
          } else if constexpr (std::is_same_v<N, CallCC> || std::is_same_v<N, Control>) {
            return term(a.fn, b.fn);
          } else if constexpr (std::is_same_v<N, Ascribe>) {
            return type_eq(a.type, b.type) && term(a.term, b.term);
          }
        },
        x->node);
  }
};

} // namespace

bool alpha_eq(const TermPtr& x, const TermPtr& y) {
  AlphaEq eq;
  return eq.term(x, y);
}

// ---------------------------------------------------------------------------

TermPtr plug(const EvalContext& e, TermPtr t) {
  for (auto it = e.frames.rbegin(); it != e.frames.rend(); ++it) {
    t = std::visit(
        [&](auto&& f) -> TermPtr {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, FrameBinL>) return mk(Bin{f.op, t, f.rhs});
          else if constexpr (std::is_same_v<F, FrameBinR>) return mk(Bin{f.op, f.lhs, t});
          else if constexpr (std::is_same_v<F, FrameIfZ>) return mk(IfZ{t, f.zero, f.nonzero});
          else if constexpr (std::is_same_v<F, FrameLet>) return mk(Let{f.binder, t, f.body});
          else if constexpr (std::is_same_v<F, FrameCall>) {
            std::vector<TermPtr> args = f.done;
            args.push_back(t);
            args.insert(args.end(), f.pending.begin(), f.pending.end());
            return mk(Call{f.name, args, f.coargs});
          } else if constexpr (std::is_same_v<F, FrameCtor>) {
            std::vector<TermPtr> args = f.done;
            args.push_back(t);
            args.insert(args.end(), f.pending.begin(), f.pending.end());
            return mk(Construct{f.ctor, args});
          } else if constexpr (std::is_same_v<F, FrameCase>) return mk(Case{t, f.clauses});
          else if constexpr (std::is_same_v<F, FrameAppL>) return mk(App{t, f.arg});
          else if constexpr (std::is_same_v<F, FrameAppR>) return mk(App{f.fn, t});
          else if constexpr (std::is_same_v<F, FrameDtor>) return mk(Destruct{t, f.dtor});
          else if constexpr (std::is_same_v<F, FrameGoto>) return mk(Goto{t, f.target});
        },
        *it);
  }
  return t;
}

TermPtr strip_ascriptions(const TermPtr& t) {
  return std::visit(
      [&](auto&& n) -> TermPtr {
        using N = std::decay_t<decltype(n)>;
        auto strip_all = [](const std::vector<TermPtr>& ts) {
          std::vector<TermPtr> out;
          out.reserve(ts.size());
          for (auto& x : ts) out.push_back(strip_ascriptions(x));
          return out;
        };
        if constexpr (std::is_same_v<N, Ascribe>) return strip_ascriptions(n.term);
        else if constexpr (std::is_same_v<N, Var> || std::is_same_v<N, Lit>) return t;
        else if constexpr (std::is_same_v<N, Bin>)
          return mk(Bin{n.op, strip_ascriptions(n.lhs), strip_ascriptions(n.rhs)});
        else if constexpr (std::is_same_v<N, IfZ>)
          return mk(IfZ{strip_ascriptions(n.scrut), strip_ascriptions(n.zero), strip_ascriptions(n.nonzero)});
        else if constexpr (std::is_same_v<N, Let>)
          return mk(Let{n.binder, strip_ascriptions(n.bound), strip_ascriptions(n.body)});
        else if constexpr (std::is_same_v<N, Call>)
          return mk(Call{n.name, strip_all(n.args), n.coargs});
        else if constexpr (std::is_same_v<N, Construct>)
          return mk(Construct{n.ctor, strip_all(n.args)});
        else if constexpr (std::is_same_v<N, Case>) {
          std::vector<CaseClause> cls;
          for (auto& cl : n.clauses) cls.push_back({cl.ctor, cl.binders, strip_ascriptions(cl.body)});
          return mk(Case{strip_ascriptions(n.scrut), cls});
        } else if constexpr (std::is_same_v<N, Destruct>)
          return mk(Destruct{strip_ascriptions(n.scrut), n.dtor});
        else if constexpr (std::is_same_v<N, Cocase>) {
          std::vector<CocaseClause> cls;
          for (auto& cl : n.clauses) cls.push_back({cl.dtor, strip_ascriptions(cl.body)});
          return mk(Cocase{cls});
        } else if constexpr (std::is_same_v<N, Lam>)
          return mk(Lam{n.binder, n.annot, strip_ascriptions(n.body)});
        else if constexpr (std::is_same_v<N, App>)
          return mk(App{strip_ascriptions(n.fn), strip_ascriptions(n.arg)});
        else if constexpr (std::is_same_v<N, Label>)
          return mk(Label{n.covar, strip_ascriptions(n.body)});
        else if constexpr (std::is_same_v<N, Goto>)
          return mk(Goto{strip_ascriptions(n.arg), n.target});
        else if constexpr (std::is_same_v<N, LetCC>)
          return mk(LetCC{n.binder, strip_ascriptions(n.body)});
        else if constexpr (std::is_same_v<N, CallCC>)
          return mk(CallCC{strip_ascriptions(n.fn)});
        else if constexpr (std::is_same_v<N, Control>)
          return mk(Control{strip_ascriptions(n.fn)});
        else if constexpr (std::is_same_v<N, LabelTop>)
          return mk(LabelTop{n.covar, strip_ascriptions(n.body)});
      },
      t->node);
}

// ---------------------------------------------------------------------------

void collect_names(const TermPtr& t, std::set<std::string>& out) {
  std::visit(
      [&](auto&& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var>) out.insert(n.name);
        else if constexpr (std::is_same_v<N, Bin>) { collect_names(n.lhs, out); collect_names(n.rhs, out); }
        else if constexpr (std::is_same_v<N, IfZ>) { collect_names(n.scrut, out); collect_names(n.zero, out); collect_names(n.nonzero, out); }
        else if constexpr (std::is_same_v<N, Let>) { out.insert(n.binder); collect_names(n.bound, out); collect_names(n.body, out); }
        else if constexpr (std::is_same_v<N, Call>) {
          for (auto& a : n.args) collect_names(a, out);
          for (auto& c : n.coargs)
            if (c.is_covar()) out.insert(c.covar);
        } else if constexpr (std::is_same_v<N, Construct>) {
          for (auto& a : n.args) collect_names(a, out);
        } else if constexpr (std::is_same_v<N, Case>) {
          collect_names(n.scrut, out);
          for (auto& cl : n.clauses) {
            for (auto& b : cl.binders) out.insert(b);
            collect_names(cl.body, out);
          }
        } else if constexpr (std::is_same_v<N, Destruct>) collect_names(n.scrut, out);
        else if constexpr (std::is_same_v<N, Cocase>) {
          for (auto& cl : n.clauses) collect_names(cl.body, out);
        } else if constexpr (std::is_same_v<N, Lam>) { out.insert(n.binder); collect_names(n.body, out); }
        else if constexpr (std::is_same_v<N, App>) { collect_names(n.fn, out); collect_names(n.arg, out); }
        else if constexpr (std::is_same_v<N, Label>) { out.insert(n.covar); collect_names(n.body, out); }
        else if constexpr (std::is_same_v<N, Goto>) {
          collect_names(n.arg, out);
          if (n.target.is_covar()) out.insert(n.target.covar);
        } else if constexpr (std::is_same_v<N, LetCC>) { out.insert(n.binder); collect_names(n.body, out); }
        else if constexpr (std::is_same_v<N, CallCC>) collect_names(n.fn, out);
        else if constexpr (std::is_same_v<N, Control>) collect_names(n.fn, out);
        else if constexpr (std::is_same_v<N, LabelTop>) { out.insert(n.covar); collect_names(n.body, out); }
        else if constexpr (std::is_same_v<N, Ascribe>) collect_names(n.term, out);
      },
      t->node);
}

void collect_names(const Program& p, std::set<std::string>& out) {
  for (auto& d : p.defs) {
    out.insert(d.name);
    for (auto& pa : d.params) out.insert(pa.name);
    for (auto& pa : d.coparams) out.insert(pa.name);
    if (d.body) collect_names(d.body, out);
  }
  if (p.main) collect_names(p.main, out);
}

} // namespace funcore::fun
