#ifndef FUNCORE_CORE_AST_HPP
#define FUNCORE_CORE_AST_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "funcore/common.hpp"
#include "funcore/types.hpp"

namespace funcore::core {

struct Producer;
struct Consumer;
struct Statement;
using ProducerPtr = std::shared_ptr<const Producer>;
using ConsumerPtr = std::shared_ptr<const Consumer>;
using StatementPtr = std::shared_ptr<const Statement>;

enum class Strategy { Cbv, Cbn };

// Name of the distinguished top-level covariable.
inline const char* kStar = "star";

// Producers
struct PVar { std::string name; };
struct PLit { long long value; };
struct Mu { std::string covar; StatementPtr body; };
struct CtorApp { Ctor ctor; std::vector<ProducerPtr> args; std::vector<ConsumerPtr> coargs; };

struct CocaseClause {
  Dtor dtor;
  std::vector<std::string> binders;   // producer binders (ap only)
  std::vector<std::string> cobinders; // consumer binders
  StatementPtr body;
};
struct CocaseP { std::vector<CocaseClause> clauses; };

struct Producer {
  std::variant<PVar, PLit, Mu, CtorApp, CocaseP> node;
};

// Consumers
struct Covar { std::string name; };
struct MuTilde { std::string var; StatementPtr body; };

struct CaseClause {
  Ctor ctor;
  std::vector<std::string> binders;
  std::vector<std::string> cobinders; // always empty for the built-in ctors
  StatementPtr body;
};
struct CaseC { std::vector<CaseClause> clauses; };
struct DtorApp { Dtor dtor; std::vector<ProducerPtr> args; std::vector<ConsumerPtr> coargs; };

struct Consumer {
  std::variant<Covar, MuTilde, CaseC, DtorApp> node;
};

// Statements
struct Cut { ProducerPtr producer; ConsumerPtr consumer; };
struct OpStmt { BinOp op; ProducerPtr lhs, rhs; ConsumerPtr after; };
struct IfZStmt { ProducerPtr scrut; StatementPtr zero, nonzero; };
struct CallStmt { std::string name; std::vector<ProducerPtr> args; std::vector<ConsumerPtr> coargs; };

struct Statement {
  std::variant<Cut, OpStmt, IfZStmt, CallStmt> node;
};

template <class T> ProducerPtr mkp(T node) {
  return std::make_shared<Producer>(Producer{std::move(node)});
}
template <class T> ConsumerPtr mkc(T node) {
  return std::make_shared<Consumer>(Consumer{std::move(node)});
}
template <class T> StatementPtr mks(T node) {
  return std::make_shared<Statement>(Statement{std::move(node)});
}
template <class T> const T* as(const ProducerPtr& p) { return std::get_if<T>(&p->node); }
template <class T> const T* as(const ConsumerPtr& c) { return std::get_if<T>(&c->node); }
template <class T> const T* as(const StatementPtr& s) { return std::get_if<T>(&s->node); }

struct Param { std::string name; TypePtr type; };

struct CoreDefinition {
  std::string name;
  std::vector<Param> params;   // producer parameters
  std::vector<Param> coparams; // consumer parameters
  StatementPtr body;
};

struct CoreProgram {
  std::vector<CoreDefinition> defs;
  // Optional main: a statement, or a producer run against `star`.
  StatementPtr main_stmt;
  ProducerPtr main_prod;
};

// cbv: literals, variables, constructors of values, cocases.
// cbn: every producer.
bool is_value(const ProducerPtr& p, Strategy s);
// cbv: every consumer. cbn: everything except mu-tilde.
bool is_covalue(const ConsumerPtr& c, Strategy s);

struct NameSets {
  std::set<std::string> vars;
  std::set<std::string> covars;
};

void free_names(const StatementPtr& s, NameSets& out);
void free_names(const ProducerPtr& p, NameSets& out);
void free_names(const ConsumerPtr& c, NameSets& out);

// Every name occurring anywhere (free or bound), for fresh-name supplies.
void collect_names(const StatementPtr& s, std::set<std::string>& out);
void collect_names(const ProducerPtr& p, std::set<std::string>& out);
void collect_names(const ConsumerPtr& c, std::set<std::string>& out);
void collect_names(const CoreProgram& p, std::set<std::string>& out);

// Simultaneous capture-avoiding substitution.
using VarMap = std::map<std::string, ProducerPtr>;
using CovarMap = std::map<std::string, ConsumerPtr>;
StatementPtr subst(const StatementPtr& s, const VarMap& vars, const CovarMap& covars);
ProducerPtr subst(const ProducerPtr& p, const VarMap& vars, const CovarMap& covars);
ConsumerPtr subst(const ConsumerPtr& c, const VarMap& vars, const CovarMap& covars);

bool alpha_eq(const StatementPtr& a, const StatementPtr& b);
bool alpha_eq(const ProducerPtr& a, const ProducerPtr& b);
bool alpha_eq(const ConsumerPtr& a, const ConsumerPtr& b);
bool alpha_eq(const CoreProgram& a, const CoreProgram& b);

} // namespace funcore::core

#endif
