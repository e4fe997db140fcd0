#ifndef FUNCORE_TRANSLATE_HPP
#define FUNCORE_TRANSLATE_HPP

#include <set>
#include <string>

#include "funcore/core/ast.hpp"
#include "funcore/fun/ast.hpp"

namespace funcore {

// Fresh names: aN for covariables, xN for variables, one shared counter.
// Emitted names never collide with reserved names or each other.
struct FreshSupply {
  std::set<std::string> reserved;
  int counter = 0;

  std::string fresh_var() { return fresh("x"); }
  std::string fresh_covar() { return fresh("a"); }

private:
  std::string fresh(const char* prefix) {
    for (;;) {
      std::string cand = prefix + std::to_string(counter++);
      if (!reserved.count(cand)) {
        reserved.insert(cand);
        return cand;
      }
    }
  }
};

FreshSupply make_supply(const fun::Program& p);
FreshSupply make_supply(const fun::TermPtr& t);

// The source term must not contain reified contexts.
core::ProducerPtr translate_term(const fun::TermPtr& t, FreshSupply& fresh);
core::CoreDefinition translate_def(const fun::Definition& d, FreshSupply& fresh);
core::CoreProgram translate_program(const fun::Program& p, FreshSupply& fresh);

} // namespace funcore

#endif
