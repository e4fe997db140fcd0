#include "funcore/trace.hpp"

#include <sstream>

#include "json.hpp"

namespace funcore {

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Stuck: return "stuck";
    case RunStatus::Fuel: return "fuel";
  }
  return "?";
}

std::string trace_json(const RunRecord& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (size_t i = 0; i < r.steps.size(); ++i)
    steps.push_back({{"i", i}, {"rule", r.steps[i].rule}, {"term", r.steps[i].term}});
  nlohmann::json out = {
      {"steps", steps}, {"result", r.result}, {"status", to_string(r.status)}};
  return out.dump();
}

std::string trace_text(const RunRecord& r) {
  std::ostringstream os;
  for (size_t i = 0; i < r.steps.size(); ++i)
    os << i << "  [" << r.steps[i].rule << "]  " << r.steps[i].term << "\n";
  return os.str();
}

} // namespace funcore
