#ifndef MULTICAT_REPORT_HPP
#define MULTICAT_REPORT_HPP

#include <string>

#include <json.hpp>

namespace mcat {

using Json = nlohmann::ordered_json;

// CLI report with the fixed field order
// {command, inputs, verdict, witnesses, data, skipped}.
struct Report {
  std::string command;
  Json inputs = Json::object();
  std::string verdict = "computed"; // yes | no | computed | error
  Json witnesses = Json::array();
  Json data = Json::object();
  Json skipped = Json::array();

  Json to_json() const;
  std::string human() const;
  int exit_code() const { return verdict == "error" ? 2 : (verdict == "no" ? 1 : 0); }
};

} // namespace mcat

#endif
