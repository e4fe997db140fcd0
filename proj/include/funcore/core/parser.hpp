#ifndef FUNCORE_CORE_PARSER_HPP
#define FUNCORE_CORE_PARSER_HPP

#include <string>
#include <variant>

#include "funcore/core/ast.hpp"
#include "funcore/fun/parser.hpp" // ParseError

namespace funcore::core {

using fun::ParseError;

std::variant<CoreProgram, ParseError> parse_core_program(const std::string& text);
std::variant<StatementPtr, ParseError> parse_core_statement(const std::string& text);
std::variant<ProducerPtr, ParseError> parse_core_producer(const std::string& text);

} // namespace funcore::core

#endif
