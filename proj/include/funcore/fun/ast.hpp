#ifndef FUNCORE_FUN_AST_HPP
#define FUNCORE_FUN_AST_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "funcore/common.hpp"
#include "funcore/types.hpp"

namespace funcore::fun {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct EvalContext;
using EvalContextPtr = std::shared_ptr<const EvalContext>;

// A consumer position in the surface language: either a covariable or,
// during evaluation, a reified evaluation context.
struct CoTarget {
  std::string covar;  // empty when reified
  EvalContextPtr ctx; // null when covariable
  bool is_covar() const { return ctx == nullptr; }
};

struct Var { std::string name; };
struct Lit { long long value; };
struct Bin { BinOp op; TermPtr lhs, rhs; };
struct IfZ { TermPtr scrut, zero, nonzero; };
struct Let { std::string binder; TermPtr bound, body; };
struct Call { std::string name; std::vector<TermPtr> args; std::vector<CoTarget> coargs; };
struct Construct { Ctor ctor; std::vector<TermPtr> args; };

struct CaseClause { Ctor ctor; std::vector<std::string> binders; TermPtr body; };
struct Case { TermPtr scrut; std::vector<CaseClause> clauses; };

struct Destruct { TermPtr scrut; Dtor dtor; };

struct CocaseClause { Dtor dtor; TermPtr body; };
struct Cocase { std::vector<CocaseClause> clauses; };

struct Lam { std::string binder; TypePtr annot; TermPtr body; }; // annot optional
struct App { TermPtr fn, arg; };

struct Label { std::string covar; TermPtr body; };
struct Goto { TermPtr arg; CoTarget target; };

// Classical control operators; recognized by the parser and translation
// but rejected by the typechecker and evaluator.
struct LetCC { std::string binder; TermPtr body; };
struct CallCC { TermPtr fn; };
struct Control { TermPtr fn; };          // Felleisen's C
struct LabelTop { std::string covar; TermPtr body; };

struct Ascribe { TermPtr term; TypePtr type; };

struct Term {
  std::variant<Var, Lit, Bin, IfZ, Let, Call, Construct, Case, Destruct,
               Cocase, Lam, App, Label, Goto, LetCC, CallCC, Control,
               LabelTop, Ascribe>
      node;
};

template <class T> TermPtr mk(T node) {
  return std::make_shared<Term>(Term{std::move(node)});
}
template <class T> const T* as(const TermPtr& t) {
  return std::get_if<T>(&t->node);
}

// Evaluation contexts, outermost frame first. A label body is not a frame:
// decomposition stops at labels.
struct FrameBinL { BinOp op; TermPtr rhs; };
struct FrameBinR { BinOp op; TermPtr lhs; };           // lhs already a value
struct FrameIfZ { TermPtr zero, nonzero; };
struct FrameLet { std::string binder; TermPtr body; };
struct FrameCall { std::string name; std::vector<TermPtr> done, pending; std::vector<CoTarget> coargs; };
struct FrameCtor { Ctor ctor; std::vector<TermPtr> done, pending; };
struct FrameCase { std::vector<CaseClause> clauses; };
struct FrameAppL { TermPtr arg; };
struct FrameAppR { TermPtr fn; };                      // fn already a value
struct FrameDtor { Dtor dtor; };
struct FrameGoto { CoTarget target; };

using Frame = std::variant<FrameBinL, FrameBinR, FrameIfZ, FrameLet, FrameCall,
                           FrameCtor, FrameCase, FrameAppL, FrameAppR,
                           FrameDtor, FrameGoto>;

struct EvalContext {
  std::vector<Frame> frames;
};

struct Param { std::string name; TypePtr type; };

struct Definition {
  std::string name;
  std::vector<Param> params;   // variable parameters
  std::vector<Param> coparams; // covariable parameters
  TypePtr ret;
  TermPtr body;
};

struct Program {
  std::vector<Definition> defs;
  TermPtr main; // optional
};

// Values: literals, constructors of values, cocases, lambdas. Variables are
// not values; a closed term under evaluation never exposes one.
bool is_value(const TermPtr& t);

void free_vars(const TermPtr& t, std::set<std::string>& out);
void free_covars(const TermPtr& t, std::set<std::string>& out);
std::set<std::string> free_vars(const TermPtr& t);
std::set<std::string> free_covars(const TermPtr& t);

// Capture-avoiding substitutions.
TermPtr subst_var(const TermPtr& t, const std::string& name, const TermPtr& replacement);
TermPtr subst_covar(const TermPtr& t, const std::string& name, const CoTarget& replacement);
TermPtr subst_multi(const TermPtr& t, const std::map<std::string, TermPtr>& vars,
                    const std::map<std::string, CoTarget>& covars);

bool alpha_eq(const TermPtr& x, const TermPtr& y);

// Rebuilds the term E[t].
TermPtr plug(const EvalContext& e, TermPtr t);

// Removes type ascriptions everywhere; they are typing hints only.
TermPtr strip_ascriptions(const TermPtr& t);

// All variable and covariable names occurring anywhere (free, bound, or as
// definition parameters), for seeding fresh-name generation.
void collect_names(const Program& p, std::set<std::string>& out);
void collect_names(const TermPtr& t, std::set<std::string>& out);

} // namespace funcore::fun

#endif
