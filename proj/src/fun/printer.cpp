#include "funcore/fun/printer.hpp"

#include <sstream>

namespace funcore::fun {

namespace {

// Precedence levels: 0 lambda/let, 1 additive, 2 multiplicative,
// 3 application, 4 postfix destructor, 5 atom.
int prec(const TermPtr& t) {
  return std::visit(
      [&](auto&& n) -> int {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Lam> || std::is_same_v<N, Let>) return 0;
        else if constexpr (std::is_same_v<N, Bin>)
          return n.op == BinOp::Mul ? 2 : 1;
        else if constexpr (std::is_same_v<N, Lit>)
          return n.value < 0 ? 1 : 5;
        else if constexpr (std::is_same_v<N, App>) return 3;
        else if constexpr (std::is_same_v<N, Destruct>) return 4;
        else return 5;
      },
      t->node);
}

std::string show_type_src(const TypePtr& t, bool arg_pos) {
  if (!t) return "?";
  switch (t->kind) {
    case TypeKind::Int: return "Int";
    case TypeKind::List: return "List(" + show_type_src(t->a, false) + ")";
    case TypeKind::Pair:
      return "Pair(" + show_type_src(t->a, false) + ", " + show_type_src(t->b, false) + ")";
    case TypeKind::Stream: return "Stream(" + show_type_src(t->a, false) + ")";
    case TypeKind::LPair:
      return "LPair(" + show_type_src(t->a, false) + ", " + show_type_src(t->b, false) + ")";
    case TypeKind::Arrow: {
      std::string s = show_type_src(t->a, true) + " -> " + show_type_src(t->b, false);
      return arg_pos ? "(" + s + ")" : s;
    }
    case TypeKind::Meta: return "?" + std::to_string(t->meta_id);
  }
  return "?";
}

void print(std::ostream& os, const TermPtr& t, int level);

void print_target(std::ostream& os, const CoTarget& ct) {
  if (ct.is_covar()) os << ct.covar;
  else print(os, plug(*ct.ctx, mk(Var{"_"})), 0);
}

void print_args(std::ostream& os, const std::vector<TermPtr>& args,
                const std::vector<CoTarget>& coargs) {
  os << "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) os << ", ";
    print(os, args[i], 0);
  }
  os << ";";
  for (size_t i = 0; i < coargs.size(); ++i) {
    os << (i ? ", " : " ");
    print_target(os, coargs[i]);
  }
  os << ")";
}

void print(std::ostream& os, const TermPtr& t, int level) {
  bool paren = prec(t) < level;
  if (paren) os << "(";
  std::visit(
      [&](auto&& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Var>) os << n.name;
        else if constexpr (std::is_same_v<N, Lit>) os << n.value;
        else if constexpr (std::is_same_v<N, Bin>) {
          int p = n.op == BinOp::Mul ? 2 : 1;
          print(os, n.lhs, p);
          os << " " << to_string(n.op) << " ";
          print(os, n.rhs, p + 1);
        } else if constexpr (std::is_same_v<N, IfZ>) {
          os << "ifz(";
          print(os, n.scrut, 0);
          os << ", ";
          print(os, n.zero, 0);
          os << ", ";
          print(os, n.nonzero, 0);
          os << ")";
        } else if constexpr (std::is_same_v<N, Let>) {
          os << "let " << n.binder << " = ";
          print(os, n.bound, 0);
          os << " in ";
          print(os, n.body, 0);
        } else if constexpr (std::is_same_v<N, Call>) {
          os << n.name;
          print_args(os, n.args, n.coargs);
        } else if constexpr (std::is_same_v<N, Construct>) {
          os << to_string(n.ctor);
          if (!n.args.empty()) {
            os << "(";
            for (size_t i = 0; i < n.args.size(); ++i) {
              if (i) os << ", ";
              print(os, n.args[i], 0);
            }
            os << ")";
          }
        } else if constexpr (std::is_same_v<N, Case>) {
          os << "case ";
          print(os, n.scrut, 0);
          os << " of {";
          for (size_t i = 0; i < n.clauses.size(); ++i) {
            auto& cl = n.clauses[i];
            os << (i ? ", " : " ") << to_string(cl.ctor);
            if (!cl.binders.empty()) {
              os << "(";
              for (size_t j = 0; j < cl.binders.size(); ++j) {
                if (j) os << ", ";
                os << cl.binders[j];
              }
              os << ")";
            }
            os << " => ";
            print(os, cl.body, 0);
          }
          os << " }";
        } else if constexpr (std::is_same_v<N, Destruct>) {
          print(os, n.scrut, 4);
          os << "." << to_string(n.dtor);
        } else if constexpr (std::is_same_v<N, Cocase>) {
          os << "cocase {";
          for (size_t i = 0; i < n.clauses.size(); ++i) {
            os << (i ? ", " : " ") << to_string(n.clauses[i].dtor) << " => ";
            print(os, n.clauses[i].body, 0);
          }
          os << " }";
        } else if constexpr (std::is_same_v<N, Lam>) {
          os << "\\" << n.binder;
          if (n.annot) os << ": " << show_type_src(n.annot, false);
          os << " => ";
          print(os, n.body, 0);
        } else if constexpr (std::is_same_v<N, App>) {
          print(os, n.fn, 3);
          os << " ";
          print(os, n.arg, 4);
        } else if constexpr (std::is_same_v<N, Label>) {
          os << "label " << n.covar << " { ";
          print(os, n.body, 0);
          os << " }";
        } else if constexpr (std::is_same_v<N, Goto>) {
          os << "goto(";
          print(os, n.arg, 0);
          os << "; ";
          print_target(os, n.target);
          os << ")";
        } else if constexpr (std::is_same_v<N, LetCC>) {
          os << "letcc " << n.binder << " { ";
          print(os, n.body, 0);
          os << " }";
        } else if constexpr (std::is_same_v<N, CallCC>) {
          os << "callcc(";
          print(os, n.fn, 0);
          os << ")";
        } else if constexpr (std::is_same_v<N, Control>) {
          os << "cc(";
          print(os, n.fn, 0);
          os << ")";
        } else if constexpr (std::is_same_v<N, LabelTop>) {
          os << "labelC " << n.covar << " { ";
          print(os, n.body, 0);
          os << " }";
        } else if constexpr (std::is_same_v<N, Ascribe>) {
          os << "(";
          print(os, n.term, 0);
          os << " : " << show_type_src(n.type, false) << ")";
        }
      },
      t->node);
  if (paren) os << ")";
}

} // namespace

std::string show_term(const TermPtr& t) {
  std::ostringstream os;
  print(os, t, 0);
  return os.str();
}

std::string show_context(const EvalContext& e) {
  return show_term(plug(e, mk(Var{"_"})));
}

std::string show_definition(const Definition& d) {
  std::ostringstream os;
  os << "def " << d.name << "(";
  for (size_t i = 0; i < d.params.size(); ++i) {
    if (i) os << ", ";
    os << d.params[i].name << ": " << show_type_src(d.params[i].type, false);
  }
  os << ";";
  for (size_t i = 0; i < d.coparams.size(); ++i) {
    os << (i ? ", " : " ");
    os << d.coparams[i].name << ": " << show_type_src(d.coparams[i].type, false);
  }
  os << "): " << show_type_src(d.ret, false) << " := " << show_term(d.body);
  return os.str();
}

std::string show_program(const Program& p) {
  std::ostringstream os;
  for (auto& d : p.defs) os << show_definition(d) << "\n";
  if (p.main) {
    if (!p.defs.empty()) os << "\n";
    os << show_term(p.main) << "\n";
  }
  return os.str();
}

} // namespace funcore::fun
