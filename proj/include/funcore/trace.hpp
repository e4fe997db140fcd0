#ifndef FUNCORE_TRACE_HPP
#define FUNCORE_TRACE_HPP

#include <string>
#include <vector>

namespace funcore {

struct TraceStep {
  std::string rule;
  std::string term; // printed form after the step
};

enum class RunStatus { Ok, Stuck, Fuel };

struct RunRecord {
  RunStatus status = RunStatus::Ok;
  std::string result; // printed final term/statement
  std::string reason; // set when stuck
  std::vector<TraceStep> steps;
};

const char* to_string(RunStatus s);
std::string trace_json(const RunRecord& r);
std::string trace_text(const RunRecord& r);

} // namespace funcore

#endif
