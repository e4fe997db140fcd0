#include "funcore/core/ast.hpp"

namespace funcore::core {

bool is_value(const ProducerPtr& p, Strategy s) {
  if (s == Strategy::Cbn) return true;
  return std::visit(
      [&](auto&& n) -> bool {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, PVar> || std::is_same_v<N, PLit> ||
                      std::is_same_v<N, CocaseP>)
          return true;
        else if constexpr (std::is_same_v<N, CtorApp>) {
          for (auto& a : n.args)
            if (!is_value(a, s)) return false;
          return true;
        } else
          return false; // Mu
      },
      p->node);
}

bool is_covalue(const ConsumerPtr& c, Strategy s) {
  if (s == Strategy::Cbv) return true;
  return !std::holds_alternative<MuTilde>(c->node);
}

// ---------------------------------------------------------------------------
// Free and occurring names

namespace {

struct Names {
  NameSets& out;
  std::map<std::string, int> bv, bcv;

  void var(const std::string& n) {
    auto it = bv.find(n);
    if (it == bv.end() || it->second == 0) out.vars.insert(n);
  }
  void covar(const std::string& n) {
    auto it = bcv.find(n);
    if (it == bcv.end() || it->second == 0) out.covars.insert(n);
  }

  void stmt(const StatementPtr& s) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Cut>) { prod(n.producer); cons(n.consumer); }
          else if constexpr (std::is_same_v<N, OpStmt>) { prod(n.lhs); prod(n.rhs); cons(n.after); }
          else if constexpr (std::is_same_v<N, IfZStmt>) { prod(n.scrut); stmt(n.zero); stmt(n.nonzero); }
          else if constexpr (std::is_same_v<N, CallStmt>) {
            for (auto& a : n.args) prod(a);
            for (auto& c : n.coargs) cons(c);
          }
        },
        s->node);
  }

  template <class Clause> void clause(const Clause& cl) {
    for (auto& b : cl.binders) ++bv[b];
    for (auto& b : cl.cobinders) ++bcv[b];
    stmt(cl.body);
    for (auto& b : cl.binders) --bv[b];
    for (auto& b : cl.cobinders) --bcv[b];
  }

  void prod(const ProducerPtr& p) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, PVar>) var(n.name);
          else if constexpr (std::is_same_v<N, PLit>) { (void)n; }
          else if constexpr (std::is_same_v<N, Mu>) {
            ++bcv[n.covar];
            stmt(n.body);
            --bcv[n.covar];
          } else if constexpr (std::is_same_v<N, CtorApp>) {
            for (auto& a : n.args) prod(a);
            for (auto& c : n.coargs) cons(c);
          } else if constexpr (std::is_same_v<N, CocaseP>) {
            for (auto& cl : n.clauses) clause(cl);
          }
        },
        p->node);
  }

  void cons(const ConsumerPtr& c) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Covar>) covar(n.name);
          else if constexpr (std::is_same_v<N, MuTilde>) {
            ++bv[n.var];
            stmt(n.body);
            --bv[n.var];
          } else if constexpr (std::is_same_v<N, CaseC>) {
            for (auto& cl : n.clauses) clause(cl);
          } else if constexpr (std::is_same_v<N, DtorApp>) {
            for (auto& a : n.args) prod(a);
            for (auto& k : n.coargs) cons(k);
          }
        },
        c->node);
  }
};

} // namespace

void free_names(const StatementPtr& s, NameSets& out) { Names{out, {}, {}}.stmt(s); }
void free_names(const ProducerPtr& p, NameSets& out) { Names{out, {}, {}}.prod(p); }
void free_names(const ConsumerPtr& c, NameSets& out) { Names{out, {}, {}}.cons(c); }

namespace {

struct Collect {
  std::set<std::string>& out;

  void stmt(const StatementPtr& s) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Cut>) { prod(n.producer); cons(n.consumer); }
          else if constexpr (std::is_same_v<N, OpStmt>) { prod(n.lhs); prod(n.rhs); cons(n.after); }
          else if constexpr (std::is_same_v<N, IfZStmt>) { prod(n.scrut); stmt(n.zero); stmt(n.nonzero); }
          else if constexpr (std::is_same_v<N, CallStmt>) {
            for (auto& a : n.args) prod(a);
            for (auto& c : n.coargs) cons(c);
          }
        },
        s->node);
  }
  void prod(const ProducerPtr& p) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, PVar>) out.insert(n.name);
          else if constexpr (std::is_same_v<N, Mu>) { out.insert(n.covar); stmt(n.body); }
          else if constexpr (std::is_same_v<N, CtorApp>) {
            for (auto& a : n.args) prod(a);
            for (auto& c : n.coargs) cons(c);
          } else if constexpr (std::is_same_v<N, CocaseP>) {
            for (auto& cl : n.clauses) {
              out.insert(cl.binders.begin(), cl.binders.end());
              out.insert(cl.cobinders.begin(), cl.cobinders.end());
              stmt(cl.body);
            }
          }
        },
        p->node);
  }
  void cons(const ConsumerPtr& c) {
    std::visit(
        [&](auto&& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Covar>) out.insert(n.name);
          else if constexpr (std::is_same_v<N, MuTilde>) { out.insert(n.var); stmt(n.body); }
          else if constexpr (std::is_same_v<N, CaseC>) {
            for (auto& cl : n.clauses) {
              out.insert(cl.binders.begin(), cl.binders.end());
              out.insert(cl.cobinders.begin(), cl.cobinders.end());
              stmt(cl.body);
            }
          } else if constexpr (std::is_same_v<N, DtorApp>) {
            for (auto& a : n.args) prod(a);
            for (auto& k : n.coargs) cons(k);
          }
        },
        c->node);
  }
};

} // namespace

void collect_names(const StatementPtr& s, std::set<std::string>& out) { Collect{out}.stmt(s); }
void collect_names(const ProducerPtr& p, std::set<std::string>& out) { Collect{out}.prod(p); }
void collect_names(const ConsumerPtr& c, std::set<std::string>& out) { Collect{out}.cons(c); }

void collect_names(const CoreProgram& p, std::set<std::string>& out) {
  for (auto& d : p.defs) {
    out.insert(d.name);
    for (auto& pa : d.params) out.insert(pa.name);
    for (auto& pa : d.coparams) out.insert(pa.name);
    if (d.body) collect_names(d.body, out);
  }
  if (p.main_stmt) collect_names(p.main_stmt, out);
  if (p.main_prod) collect_names(p.main_prod, out);
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

struct SubstMaps {
  VarMap vars;
  CovarMap covars;
  bool empty() const { return vars.empty() && covars.empty(); }

  NameSets image_free() const {
    NameSets s;
    for (auto& [k, v] : vars) free_names(v, s);
    for (auto& [k, v] : covars) free_names(v, s);
    return s;
  }
};

struct S {
  static std::string bindVar(SubstMaps& m, const std::string& name, const NameSets& body_free) {
    m.vars.erase(name);
    if (m.empty()) return name;
    NameSets imgs = m.image_free();
    if (!imgs.vars.count(name)) return name;
    std::set<std::string> avoid = imgs.vars;
    avoid.insert(body_free.vars.begin(), body_free.vars.end());
    std::string renamed = fresh_name(name, avoid);
    m.vars[name] = mkp(PVar{renamed});
    return renamed;
  }
  static std::string bindCovar(SubstMaps& m, const std::string& name, const NameSets& body_free) {
    m.covars.erase(name);
    if (m.empty()) return name;
    NameSets imgs = m.image_free();
    if (!imgs.covars.count(name)) return name;
    std::set<std::string> avoid = imgs.covars;
    avoid.insert(body_free.covars.begin(), body_free.covars.end());
    std::string renamed = fresh_name(name, avoid);
    m.covars[name] = mkc(Covar{renamed});
    return renamed;
  }

  template <class Clause>
  static Clause clause(const Clause& cl, const SubstMaps& m) {
    SubstMaps m2 = m;
    NameSets body_free;
    free_names(cl.body, body_free);
    Clause out = cl;
    for (auto& b : out.binders) b = bindVar(m2, b, body_free);
    for (auto& b : out.cobinders) b = bindCovar(m2, b, body_free);
    out.body = stmt(cl.body, m2);
    return out;
  }

  static std::vector<ProducerPtr> prods(const std::vector<ProducerPtr>& ps, const SubstMaps& m) {
    std::vector<ProducerPtr> out;
    out.reserve(ps.size());
    for (auto& p : ps) out.push_back(prod(p, m));
    return out;
  }
  static std::vector<ConsumerPtr> conses(const std::vector<ConsumerPtr>& cs, const SubstMaps& m) {
    std::vector<ConsumerPtr> out;
    out.reserve(cs.size());
    for (auto& c : cs) out.push_back(cons(c, m));
    return out;
  }

  static StatementPtr stmt(const StatementPtr& s, const SubstMaps& m) {
    if (m.empty()) return s;
    return std::visit(
        [&](auto&& n) -> StatementPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Cut>)
            return mks(Cut{prod(n.producer, m), cons(n.consumer, m)});
          else if constexpr (std::is_same_v<N, OpStmt>)
            return mks(OpStmt{n.op, prod(n.lhs, m), prod(n.rhs, m), cons(n.after, m)});
          else if constexpr (std::is_same_v<N, IfZStmt>)
            return mks(IfZStmt{prod(n.scrut, m), stmt(n.zero, m), stmt(n.nonzero, m)});
          else
            return mks(CallStmt{n.name, prods(n.args, m), conses(n.coargs, m)});
        },
        s->node);
  }

  static ProducerPtr prod(const ProducerPtr& p, const SubstMaps& m) {
    if (m.empty()) return p;
    return std::visit(
        [&](auto&& n) -> ProducerPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, PVar>) {
            auto it = m.vars.find(n.name);
            return it != m.vars.end() ? it->second : p;
          } else if constexpr (std::is_same_v<N, PLit>) {
            return p;
          } else if constexpr (std::is_same_v<N, Mu>) {
            SubstMaps m2 = m;
            NameSets body_free;
            free_names(n.body, body_free);
            std::string b = bindCovar(m2, n.covar, body_free);
            return mkp(Mu{b, stmt(n.body, m2)});
          } else if constexpr (std::is_same_v<N, CtorApp>) {
            return mkp(CtorApp{n.ctor, prods(n.args, m), conses(n.coargs, m)});
          } else {
            std::vector<CocaseClause> cls;
            for (auto& cl : n.clauses) cls.push_back(clause(cl, m));
            return mkp(CocaseP{cls});
          }
        },
        p->node);
  }

  static ConsumerPtr cons(const ConsumerPtr& c, const SubstMaps& m) {
    if (m.empty()) return c;
    return std::visit(
        [&](auto&& n) -> ConsumerPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Covar>) {
            auto it = m.covars.find(n.name);
            return it != m.covars.end() ? it->second : c;
          } else if constexpr (std::is_same_v<N, MuTilde>) {
            SubstMaps m2 = m;
            NameSets body_free;
            free_names(n.body, body_free);
            std::string b = bindVar(m2, n.var, body_free);
            return mkc(MuTilde{b, stmt(n.body, m2)});
          } else if constexpr (std::is_same_v<N, CaseC>) {
            std::vector<CaseClause> cls;
            for (auto& cl : n.clauses) cls.push_back(clause(cl, m));
            return mkc(CaseC{cls});
          } else {
            return mkc(DtorApp{n.dtor, prods(n.args, m), conses(n.coargs, m)});
          }
        },
        c->node);
  }
};

} // namespace

StatementPtr subst(const StatementPtr& s, const VarMap& vars, const CovarMap& covars) {
  return S::stmt(s, SubstMaps{vars, covars});
}
ProducerPtr subst(const ProducerPtr& p, const VarMap& vars, const CovarMap& covars) {
  return S::prod(p, SubstMaps{vars, covars});
}
ConsumerPtr subst(const ConsumerPtr& c, const VarMap& vars, const CovarMap& covars) {
  return S::cons(c, SubstMaps{vars, covars});
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace {

struct Alpha {
  std::vector<std::pair<std::string, std::string>> vars, covars;

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

  template <class Clause> bool clause(const Clause& a, const Clause& b) {
    if (a.binders.size() != b.binders.size() || a.cobinders.size() != b.cobinders.size())
      return false;
    size_t vm = vars.size(), cm = covars.size();
    for (size_t i = 0; i < a.binders.size(); ++i) vars.push_back({a.binders[i], b.binders[i]});
    for (size_t i = 0; i < a.cobinders.size(); ++i) covars.push_back({a.cobinders[i], b.cobinders[i]});
    bool ok = stmt(a.body, b.body);
    vars.resize(vm);
    covars.resize(cm);
    return ok;
  }

  bool prods(const std::vector<ProducerPtr>& a, const std::vector<ProducerPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!prod(a[i], b[i])) return false;
    return true;
  }
  bool conses(const std::vector<ConsumerPtr>& a, const std::vector<ConsumerPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!cons(a[i], b[i])) return false;
    return true;
  }

  bool stmt(const StatementPtr& x, const StatementPtr& y) {
    if (x->node.index() != y->node.index()) return false;
    return std::visit(
        [&](auto&& a) -> bool {
          using N = std::decay_t<decltype(a)>;
          auto& b = std::get<N>(y->node);
          if constexpr (std::is_same_v<N, Cut>)
            return prod(a.producer, b.producer) && cons(a.consumer, b.consumer);
          else if constexpr (std::is_same_v<N, OpStmt>)
            return a.op == b.op && prod(a.lhs, b.lhs) && prod(a.rhs, b.rhs) && cons(a.after, b.after);
          else if constexpr (std::is_same_v<N, IfZStmt>)
            return prod(a.scrut, b.scrut) && stmt(a.zero, b.zero) && stmt(a.nonzero, b.nonzero);
          else
            return a.name == b.name && prods(a.args, b.args) && conses(a.coargs, b.coargs);
        },
        x->node);
  }

  bool prod(const ProducerPtr& x, const ProducerPtr& y) {
    if (x->node.index() != y->node.index()) return false;
    return std::visit(
        [&](auto&& a) -> bool {
          using N = std::decay_t<decltype(a)>;
          auto& b = std::get<N>(y->node);
          if constexpr (std::is_same_v<N, PVar>) return varRef(a.name, b.name);
          else if constexpr (std::is_same_v<N, PLit>) return a.value == b.value;
          else if constexpr (std::is_same_v<N, Mu>) {
            covars.push_back({a.covar, b.covar});
            bool ok = stmt(a.body, b.body);
            covars.pop_back();
            return ok;
          } else if constexpr (std::is_same_v<N, CtorApp>) {
            return a.ctor == b.ctor && prods(a.args, b.args) && conses(a.coargs, b.coargs);
          } else {
            if (a.clauses.size() != b.clauses.size()) return false;
            for (size_t i = 0; i < a.clauses.size(); ++i) {
              if (a.clauses[i].dtor != b.clauses[i].dtor) return false;
              if (!clause(a.clauses[i], b.clauses[i])) return false;
            }
            return true;
          }
        },
        x->node);
  }

  bool cons(const ConsumerPtr& x, const ConsumerPtr& y) {
    if (x->node.index() != y->node.index()) return false;
    return std::visit(
        [&](auto&& a) -> bool {
          using N = std::decay_t<decltype(a)>;
          auto& b = std::get<N>(y->node);
          if constexpr (std::is_same_v<N, Covar>) return covarRef(a.name, b.name);
          else if constexpr (std::is_same_v<N, MuTilde>) {
            vars.push_back({a.var, b.var});
            bool ok = stmt(a.body, b.body);
            vars.pop_back();
            return ok;
          } else if constexpr (std::is_same_v<N, CaseC>) {
            if (a.clauses.size() != b.clauses.size()) return false;
            for (size_t i = 0; i < a.clauses.size(); ++i) {
              if (a.clauses[i].ctor != b.clauses[i].ctor) return false;
              if (!clause(a.clauses[i], b.clauses[i])) return false;
            }
            return true;
          } else {
            return a.dtor == b.dtor && prods(a.args, b.args) && conses(a.coargs, b.coargs);
          }
        },
        x->node);
  }
};

} // namespace

bool alpha_eq(const StatementPtr& a, const StatementPtr& b) { return Alpha{}.stmt(a, b); }
bool alpha_eq(const ProducerPtr& a, const ProducerPtr& b) { return Alpha{}.prod(a, b); }
bool alpha_eq(const ConsumerPtr& a, const ConsumerPtr& b) { return Alpha{}.cons(a, b); }

bool alpha_eq(const CoreProgram& a, const CoreProgram& b) {
  if (a.defs.size() != b.defs.size()) return false;
  for (size_t i = 0; i < a.defs.size(); ++i) {
    const CoreDefinition& da = a.defs[i];
    const CoreDefinition& db = b.defs[i];
    if (da.name != db.name || da.params.size() != db.params.size() ||
        da.coparams.size() != db.coparams.size())
      return false;
    Alpha eq;
    for (size_t j = 0; j < da.params.size(); ++j)
      eq.vars.push_back({da.params[j].name, db.params[j].name});
    for (size_t j = 0; j < da.coparams.size(); ++j)
      eq.covars.push_back({da.coparams[j].name, db.coparams[j].name});
    if (!eq.stmt(da.body, db.body)) return false;
  }
  bool am = a.main_stmt != nullptr, bm = b.main_stmt != nullptr;
  if (am != bm) return false;
  if (am && !alpha_eq(a.main_stmt, b.main_stmt)) return false;
  bool ap = a.main_prod != nullptr, bp = b.main_prod != nullptr;
  if (ap != bp) return false;
  if (ap && !alpha_eq(a.main_prod, b.main_prod)) return false;
  return true;
}

} // namespace funcore::core
