#ifndef SAMUEL_REPORT_HPP
#define SAMUEL_REPORT_HPP

#include <string>
#include <vector>

namespace samuel {

// Machine-facing result of one CLI-level computation. Rational values are
// rendered as reduced "a/b" strings, never as decimals; infinity is "inf".
struct Report {
  std::string value;
  bool certified = true;
  std::string route;
  std::vector<std::string> trace;
  std::vector<std::string> diagnostics;

  std::string to_json() const;
};

}  // namespace samuel

#endif
