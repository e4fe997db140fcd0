#ifndef FUNCORE_FUN_PRINTER_HPP
#define FUNCORE_FUN_PRINTER_HPP

#include <string>

#include "funcore/fun/ast.hpp"

namespace funcore::fun {

// Prints with minimal parentheses; output parses back to the same tree.
std::string show_term(const TermPtr& t);
std::string show_program(const Program& p);
std::string show_definition(const Definition& d);

// Reified contexts render as the plugged term with `_` at the hole.
std::string show_context(const EvalContext& e);

} // namespace funcore::fun

#endif
