#include "funcore/translate.hpp"

#include <stdexcept>

namespace funcore {

namespace fc = funcore::core;
namespace ff = funcore::fun;

FreshSupply make_supply(const fun::Program& p) {
  FreshSupply s;
  ff::collect_names(p, s.reserved);
  s.reserved.insert(fc::kStar);
  return s;
}

FreshSupply make_supply(const fun::TermPtr& t) {
  FreshSupply s;
  ff::collect_names(t, s.reserved);
  s.reserved.insert(fc::kStar);
  return s;
}

namespace {

fc::ConsumerPtr covar_of(const ff::CoTarget& ct) {
  if (!ct.is_covar())
    throw std::invalid_argument("cannot translate a term containing a reified context");
  return fc::mkc(fc::Covar{ct.covar});
}

struct Translator {
  FreshSupply& fresh;

  fc::ProducerPtr term(const ff::TermPtr& t) {
    return std::visit(
        [&](auto&& n) -> fc::ProducerPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, ff::Var>) {
            return fc::mkp(fc::PVar{n.name});
          } else if constexpr (std::is_same_v<N, ff::Lit>) {
            return fc::mkp(fc::PLit{n.value});
          } else if constexpr (std::is_same_v<N, ff::Bin>) {
            std::string a = fresh.fresh_covar();
            return fc::mkp(fc::Mu{
                a, fc::mks(fc::OpStmt{n.op, term(n.lhs), term(n.rhs), fc::mkc(fc::Covar{a})})});
          } else if constexpr (std::is_same_v<N, ff::IfZ>) {
            std::string a = fresh.fresh_covar();
            auto alpha = [&] { return fc::mkc(fc::Covar{a}); };
            return fc::mkp(fc::Mu{
                a, fc::mks(fc::IfZStmt{term(n.scrut),
                                       fc::mks(fc::Cut{term(n.zero), alpha()}),
                                       fc::mks(fc::Cut{term(n.nonzero), alpha()})})});
          } else if constexpr (std::is_same_v<N, ff::Let>) {
            std::string a = fresh.fresh_covar();
            return fc::mkp(fc::Mu{
                a, fc::mks(fc::Cut{
                       term(n.bound),
                       fc::mkc(fc::MuTilde{
                           n.binder,
                           fc::mks(fc::Cut{term(n.body), fc::mkc(fc::Covar{a})})})})});
          } else if constexpr (std::is_same_v<N, ff::Call>) {
            std::string a = fresh.fresh_covar();
            std::vector<fc::ProducerPtr> args;
            for (auto& x : n.args) args.push_back(term(x));
            std::vector<fc::ConsumerPtr> coargs;
            for (auto& c : n.coargs) coargs.push_back(covar_of(c));
            coargs.push_back(fc::mkc(fc::Covar{a}));
            return fc::mkp(fc::Mu{a, fc::mks(fc::CallStmt{n.name, args, coargs})});
          } else if constexpr (std::is_same_v<N, ff::Construct>) {
            std::vector<fc::ProducerPtr> args;
            for (auto& x : n.args) args.push_back(term(x));
            return fc::mkp(fc::CtorApp{n.ctor, args, {}});
          } else if constexpr (std::is_same_v<N, ff::Case>) {
            std::string a = fresh.fresh_covar();
            std::vector<fc::CaseClause> cls;
            for (auto& cl : n.clauses)
              cls.push_back({cl.ctor, cl.binders, {},
                             fc::mks(fc::Cut{term(cl.body), fc::mkc(fc::Covar{a})})});
            return fc::mkp(fc::Mu{
                a, fc::mks(fc::Cut{term(n.scrut), fc::mkc(fc::CaseC{cls})})});
          } else if constexpr (std::is_same_v<N, ff::Destruct>) {
            std::string a = fresh.fresh_covar();
            return fc::mkp(fc::Mu{
                a, fc::mks(fc::Cut{term(n.scrut),
                                   fc::mkc(fc::DtorApp{n.dtor, {}, {fc::mkc(fc::Covar{a})}})})});
          } else if constexpr (std::is_same_v<N, ff::Cocase>) {
            std::vector<fc::CocaseClause> cls;
            for (auto& cl : n.clauses) {
              std::string a = fresh.fresh_covar();
              cls.push_back({cl.dtor, {}, {a},
                             fc::mks(fc::Cut{term(cl.body), fc::mkc(fc::Covar{a})})});
            }
            return fc::mkp(fc::CocaseP{cls});
          } else if constexpr (std::is_same_v<N, ff::Lam>) {
            std::string a = fresh.fresh_covar();
            fc::CocaseClause cl{Dtor::Ap, {n.binder}, {a},
                                fc::mks(fc::Cut{term(n.body), fc::mkc(fc::Covar{a})})};
            return fc::mkp(fc::CocaseP{{cl}});
          } else if constexpr (std::is_same_v<N, ff::App>) {
            std::string a = fresh.fresh_covar();
            return fc::mkp(fc::Mu{
                a, fc::mks(fc::Cut{term(n.fn),
                                   fc::mkc(fc::DtorApp{Dtor::Ap,
                                                       {term(n.arg)},
                                                       {fc::mkc(fc::Covar{a})}})})});
          } else if constexpr (std::is_same_v<N, ff::Label>) {
            // The source label name is reused as the mu binder.
            return fc::mkp(fc::Mu{
                n.covar, fc::mks(fc::Cut{term(n.body), fc::mkc(fc::Covar{n.covar})})});
          } else if constexpr (std::is_same_v<N, ff::Goto>) {
            std::string b = fresh.fresh_covar();
            return fc::mkp(fc::Mu{b, fc::mks(fc::Cut{term(n.arg), covar_of(n.target)})});
          } else if constexpr (std::is_same_v<N, ff::LetCC>) {
            std::string a = fresh.fresh_covar();
            return fc::mkp(fc::Mu{
                a, fc::mks(fc::Cut{
                       reifier(a),
                       fc::mkc(fc::MuTilde{
                           n.binder,
                           fc::mks(fc::Cut{term(n.body), fc::mkc(fc::Covar{a})})})})});
          } else if constexpr (std::is_same_v<N, ff::CallCC>) {
            std::string a = fresh.fresh_covar();
            return fc::mkp(fc::Mu{
                a, fc::mks(fc::Cut{term(n.fn),
                                   fc::mkc(fc::DtorApp{Dtor::Ap,
                                                       {reifier(a)},
                                                       {fc::mkc(fc::Covar{a})}})})});
          } else if constexpr (std::is_same_v<N, ff::Control>) {
            std::string a = fresh.fresh_covar();
            return fc::mkp(fc::Mu{
                a, fc::mks(fc::Cut{term(n.fn),
                                   fc::mkc(fc::DtorApp{Dtor::Ap,
                                                       {reifier(a)},
                                                       {fc::mkc(fc::Covar{fc::kStar})}})})});
          } else if constexpr (std::is_same_v<N, ff::LabelTop>) {
            return fc::mkp(fc::Mu{
                n.covar, fc::mks(fc::Cut{term(n.body), fc::mkc(fc::Covar{fc::kStar})})});
          } else { // Ascribe
            return term(n.term);
          }
        },
        t->node);
  }

  // cocase { ap(x; b) => < x | a > }: the function value that jumps to a.
  fc::ProducerPtr reifier(const std::string& a) {
    std::string x = fresh.fresh_var();
    std::string b = fresh.fresh_covar();
    fc::CocaseClause cl{Dtor::Ap, {x}, {b},
                        fc::mks(fc::Cut{fc::mkp(fc::PVar{x}), fc::mkc(fc::Covar{a})})};
    return fc::mkp(fc::CocaseP{{cl}});
  }
};

} // namespace

core::ProducerPtr translate_term(const fun::TermPtr& t, FreshSupply& fresh) {
  Translator tr{fresh};
  return tr.term(t);
}

core::CoreDefinition translate_def(const fun::Definition& d, FreshSupply& fresh) {
  Translator tr{fresh};
  std::string a = fresh.fresh_covar();
  fc::CoreDefinition out;
  out.name = d.name;
  for (auto& p : d.params) out.params.push_back({p.name, p.type});
  for (auto& p : d.coparams) out.coparams.push_back({p.name, p.type});
  out.coparams.push_back({a, d.ret});
  out.body = fc::mks(fc::Cut{tr.term(d.body), fc::mkc(fc::Covar{a})});
  return out;
}

core::CoreProgram translate_program(const fun::Program& p, FreshSupply& fresh) {
  fc::CoreProgram out;
  for (auto& d : p.defs) out.defs.push_back(translate_def(d, fresh));
  if (p.main) out.main_prod = translate_term(p.main, fresh);
  return out;
}

} // namespace funcore
