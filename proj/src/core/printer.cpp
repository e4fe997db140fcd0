#include "funcore/core/printer.hpp"

#include <sstream>

namespace funcore::core {

namespace {

void prod(std::ostream& os, const ProducerPtr& p);
void cons(std::ostream& os, const ConsumerPtr& c);
void stmt(std::ostream& os, const StatementPtr& s);

void show_type_src(std::ostream& os, const TypePtr& t, bool arg_pos) {
  if (!t) { os << "?"; return; }
  switch (t->kind) {
    case TypeKind::Int: os << "Int"; return;
    case TypeKind::List:
      os << "List(";
      show_type_src(os, t->a, false);
      os << ")";
      return;
    case TypeKind::Pair:
      os << "Pair(";
      show_type_src(os, t->a, false);
      os << ", ";
      show_type_src(os, t->b, false);
      os << ")";
      return;
    case TypeKind::Stream:
      os << "Stream(";
      show_type_src(os, t->a, false);
      os << ")";
      return;
    case TypeKind::LPair:
      os << "LPair(";
      show_type_src(os, t->a, false);
      os << ", ";
      show_type_src(os, t->b, false);
      os << ")";
      return;
    case TypeKind::Arrow:
      if (arg_pos) os << "(";
      show_type_src(os, t->a, true);
      os << " -> ";
      show_type_src(os, t->b, false);
      if (arg_pos) os << ")";
      return;
    case TypeKind::Meta: os << "?" << t->meta_id; return;
  }
}

void arglists(std::ostream& os, const std::vector<ProducerPtr>& args,
              const std::vector<ConsumerPtr>& coargs, bool force_parens) {
  if (args.empty() && coargs.empty()) {
    if (force_parens) os << "()";
    return;
  }
  os << "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) os << ", ";
    prod(os, args[i]);
  }
  if (!args.empty() && !coargs.empty()) os << "; ";
  for (size_t i = 0; i < coargs.size(); ++i) {
    if (i) os << ", ";
    cons(os, coargs[i]);
  }
  os << ")";
}

void clause_header(std::ostream& os, const std::vector<std::string>& binders,
                   const std::vector<std::string>& cobinders) {
  if (binders.empty() && cobinders.empty()) return;
  os << "(";
  for (size_t i = 0; i < binders.size(); ++i) {
    if (i) os << ", ";
    os << binders[i];
  }
  if (!binders.empty() && !cobinders.empty()) os << "; ";
  for (size_t i = 0; i < cobinders.size(); ++i) {
    if (i) os << ", ";
    os << cobinders[i];
  }
  os << ")";
}

void prod(std::ostream& os, const ProducerPtr& p) {
  std::visit(
      [&](auto&& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, PVar>) os << n.name;
        else if constexpr (std::is_same_v<N, PLit>) os << n.value;
        else if constexpr (std::is_same_v<N, Mu>) {
          os << "mu " << n.covar << ". ";
          stmt(os, n.body);
        } else if constexpr (std::is_same_v<N, CtorApp>) {
          os << to_string(n.ctor);
          arglists(os, n.args, n.coargs, false);
        } else {
          os << "cocase {";
          for (size_t i = 0; i < n.clauses.size(); ++i) {
            auto& cl = n.clauses[i];
            os << (i ? ", " : " ") << to_string(cl.dtor);
            clause_header(os, cl.binders, cl.cobinders);
            os << " => ";
            stmt(os, cl.body);
          }
          os << " }";
        }
      },
      p->node);
}

void cons(std::ostream& os, const ConsumerPtr& c) {
  std::visit(
      [&](auto&& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Covar>) os << n.name;
        else if constexpr (std::is_same_v<N, MuTilde>) {
          os << "mu~ " << n.var << ". ";
          stmt(os, n.body);
        } else if constexpr (std::is_same_v<N, CaseC>) {
          os << "case {";
          for (size_t i = 0; i < n.clauses.size(); ++i) {
            auto& cl = n.clauses[i];
            os << (i ? ", " : " ") << to_string(cl.ctor);
            clause_header(os, cl.binders, cl.cobinders);
            os << " => ";
            stmt(os, cl.body);
          }
          os << " }";
        } else {
          os << to_string(n.dtor);
          arglists(os, n.args, n.coargs, true);
        }
      },
      c->node);
}

void stmt(std::ostream& os, const StatementPtr& s) {
  std::visit(
      [&](auto&& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Cut>) {
          os << "< ";
          prod(os, n.producer);
          os << " | ";
          cons(os, n.consumer);
          os << " >";
        } else if constexpr (std::is_same_v<N, OpStmt>) {
          os << to_string(n.op) << "(";
          prod(os, n.lhs);
          os << ", ";
          prod(os, n.rhs);
          os << "; ";
          cons(os, n.after);
          os << ")";
        } else if constexpr (std::is_same_v<N, IfZStmt>) {
          os << "ifz(";
          prod(os, n.scrut);
          os << ", ";
          stmt(os, n.zero);
          os << ", ";
          stmt(os, n.nonzero);
          os << ")";
        } else {
          os << n.name << "(";
          for (size_t i = 0; i < n.args.size(); ++i) {
            if (i) os << ", ";
            prod(os, n.args[i]);
          }
          os << ";";
          for (size_t i = 0; i < n.coargs.size(); ++i) {
            os << (i ? ", " : " ");
            cons(os, n.coargs[i]);
          }
          os << ")";
        }
      },
      s->node);
}

} // namespace

std::string show_producer(const ProducerPtr& p) {
  std::ostringstream os;
  prod(os, p);
  return os.str();
}

std::string show_consumer(const ConsumerPtr& c) {
  std::ostringstream os;
  cons(os, c);
  return os.str();
}

std::string show_statement(const StatementPtr& s) {
  std::ostringstream os;
  stmt(os, s);
  return os.str();
}

std::string show_definition(const CoreDefinition& d) {
  std::ostringstream os;
  os << "def " << d.name << "(";
  for (size_t i = 0; i < d.params.size(); ++i) {
    if (i) os << ", ";
    os << d.params[i].name << ": ";
    show_type_src(os, d.params[i].type, false);
  }
  os << ";";
  for (size_t i = 0; i < d.coparams.size(); ++i) {
    os << (i ? ", " : " ");
    os << d.coparams[i].name << ": ";
    show_type_src(os, d.coparams[i].type, false);
  }
  os << ") := ";
  stmt(os, d.body);
  return os.str();
}

std::string show_program(const CoreProgram& p) {
  std::ostringstream os;
  for (auto& d : p.defs) os << show_definition(d) << "\n";
  if (p.main_stmt) {
    if (!p.defs.empty()) os << "\n";
    os << show_statement(p.main_stmt) << "\n";
  } else if (p.main_prod) {
    if (!p.defs.empty()) os << "\n";
    os << show_producer(p.main_prod) << "\n";
  }
  return os.str();
}

} // namespace funcore::core
