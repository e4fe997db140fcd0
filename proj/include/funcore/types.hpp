#ifndef FUNCORE_TYPES_HPP
#define FUNCORE_TYPES_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace funcore {

// Types are shared between the surface language and the sequent core.
// Meta is only produced inside the core typechecker.
struct Type;
using TypePtr = std::shared_ptr<const Type>;

enum class TypeKind { Int, List, Pair, Stream, LPair, Arrow, Meta };

struct Type {
  TypeKind kind;
  TypePtr a;
  TypePtr b;
  int meta_id = -1;
};

TypePtr t_int();
TypePtr t_list(TypePtr elem);
TypePtr t_pair(TypePtr fst, TypePtr snd);
TypePtr t_stream(TypePtr elem);
TypePtr t_lpair(TypePtr fst, TypePtr snd);
TypePtr t_arrow(TypePtr arg, TypePtr res);
TypePtr t_meta(int id);

bool type_eq(const TypePtr& x, const TypePtr& y);
std::string show_type(const TypePtr& t);

// One ordered context for both variables (producer side) and covariables
// (consumer side). Lookup takes the rightmost binding.
enum class Mode { Prd, Cns };

struct Binding {
  std::string name;
  Mode mode;
  TypePtr type; // null marks a binding whose type may not be consulted
};

struct TypingContext {
  std::vector<Binding> bindings;

  void bind(const std::string& name, Mode mode, TypePtr type) {
    bindings.push_back({name, mode, std::move(type)});
  }
  const Binding* lookup(const std::string& name, Mode mode) const {
    for (auto it = bindings.rbegin(); it != bindings.rend(); ++it)
      if (it->mode == mode && it->name == name) return &*it;
    return nullptr;
  }
};

enum class TypeErrorKind {
  Mismatch,
  UnboundVariable,
  UnboundCovariable,
  UnknownDefinition,
  ArityMismatch,
  BadClauses,
  CannotInfer,
  UnsupportedConstruct,
};

class TypeError : public std::runtime_error {
public:
  TypeError(TypeErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind(kind) {}
  TypeErrorKind kind;
};

} // namespace funcore

#endif
