#include "modelkit/report.hpp"

namespace modelkit {

std::string Report::summary_line() const {
  std::string out = "bijection_ok: ";
  out += ok ? "true" : "false";
  for (const auto& [key, value] : counts) out += ", " + key + ": " + std::to_string(value);
  return out;
}

}  // namespace modelkit
