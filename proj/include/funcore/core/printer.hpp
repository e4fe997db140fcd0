#ifndef FUNCORE_CORE_PRINTER_HPP
#define FUNCORE_CORE_PRINTER_HPP

#include <string>

#include "funcore/core/ast.hpp"

namespace funcore::core {

std::string show_producer(const ProducerPtr& p);
std::string show_consumer(const ConsumerPtr& c);
std::string show_statement(const StatementPtr& s);
std::string show_definition(const CoreDefinition& d);
std::string show_program(const CoreProgram& p);

} // namespace funcore::core

#endif
