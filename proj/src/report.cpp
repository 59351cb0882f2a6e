#include "multicat/report.hpp"

#include <sstream>

namespace mcat {

Json Report::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["inputs"] = inputs;
  j["verdict"] = verdict;
  j["witnesses"] = witnesses;
  j["data"] = data;
  j["skipped"] = skipped;
  return j;
}

std::string Report::human() const {
  std::ostringstream out;
  out << command << ": " << verdict << "\n";
  if (!witnesses.empty()) {
    out << "witnesses:\n";
    for (const auto& w : witnesses) out << "  " << w.dump() << "\n";
  }
  if (!data.empty()) {
    for (auto it = data.begin(); it != data.end(); ++it) out << it.key() << ": " << it.value().dump() << "\n";
  }
  if (!skipped.empty()) {
    out << "skipped:\n";
    for (const auto& s : skipped) out << "  " << s.dump() << "\n";
  }
  return out.str();
}

} // namespace mcat
