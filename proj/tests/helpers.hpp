#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "funcore/core/parser.hpp"
#include "funcore/core/printer.hpp"
#include "funcore/fun/parser.hpp"
#include "funcore/fun/printer.hpp"

namespace testutil {

inline funcore::fun::TermPtr fterm(const std::string& src) {
  auto r = funcore::fun::parse_term(src);
  if (auto* e = std::get_if<funcore::fun::ParseError>(&r))
    throw std::runtime_error("parse failed: " + e->message() + " in: " + src);
  return std::get<funcore::fun::TermPtr>(r);
}

inline funcore::fun::Program fprog(const std::string& src) {
  auto r = funcore::fun::parse_program(src);
  if (auto* e = std::get_if<funcore::fun::ParseError>(&r))
    throw std::runtime_error("parse failed: " + e->message() + " in: " + src);
  return std::get<funcore::fun::Program>(std::move(r));
}

inline funcore::core::StatementPtr cstmt(const std::string& src) {
  auto r = funcore::core::parse_core_statement(src);
  if (auto* e = std::get_if<funcore::core::ParseError>(&r))
    throw std::runtime_error("parse failed: " + e->message() + " in: " + src);
  return std::get<funcore::core::StatementPtr>(r);
}

inline funcore::core::ProducerPtr cprod(const std::string& src) {
  auto r = funcore::core::parse_core_producer(src);
  if (auto* e = std::get_if<funcore::core::ParseError>(&r))
    throw std::runtime_error("parse failed: " + e->message() + " in: " + src);
  return std::get<funcore::core::ProducerPtr>(r);
}

inline funcore::core::CoreProgram cprogram(const std::string& src) {
  auto r = funcore::core::parse_core_program(src);
  if (auto* e = std::get_if<funcore::core::ParseError>(&r))
    throw std::runtime_error("parse failed: " + e->message() + " in: " + src);
  return std::get<funcore::core::CoreProgram>(std::move(r));
}

} // namespace testutil

#endif
