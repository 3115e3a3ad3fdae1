#include "samuel/report.hpp"

#include <json.hpp>

namespace samuel {

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["value"] = value;
  j["certified"] = certified;
  j["route"] = route;
  j["trace"] = trace;
  j["diagnostics"] = diagnostics;
  return j.dump();
}

}  // namespace samuel
