#ifndef FUNCORE_FUN_PARSER_HPP
#define FUNCORE_FUN_PARSER_HPP

#include <string>
#include <variant>

#include "funcore/fun/ast.hpp"

namespace funcore::fun {

struct ParseError {
  int line = 0;
  int col = 0;
  std::string expected;
  std::string found;
  std::string message() const;
};

// Total: any input yields a Program or a ParseError.
std::variant<Program, ParseError> parse_program(const std::string& text);
std::variant<TermPtr, ParseError> parse_term(const std::string& text);

} // namespace funcore::fun

#endif
