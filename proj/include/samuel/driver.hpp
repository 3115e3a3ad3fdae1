#ifndef SAMUEL_DRIVER_HPP
#define SAMUEL_DRIVER_HPP

#include <string>

#include "samuel/report.hpp"
#include "samuel/ring_file.hpp"
#include "samuel/slope.hpp"

namespace samuel {

// Flag set shared by every verb; mirrors the CLI surface.
struct DriverOptions {
  std::string elem;      // polynomial expression
  std::string prime;     // comma-separated variables
  std::string at;        // "v1=c1,v2=c2"; probe: several joined by ';'
  std::string base;      // comma-separated base variables
  std::string fiber;     // comma-separated fiber variables
  std::string strategy = "auto";
  bool search = false;
  bool nonlocalized = false;
  bool trace = false;
  int nmax = kDefaultOracleDepth;
  int cap = kDefaultOrderCap;
};

Report run_order(const LocalRingPresentation& P, const DriverOptions& o);
Report run_oracle(const LocalRingPresentation& P, const DriverOptions& o);
Report run_multiplicity(const LocalRingPresentation& P, const DriverOptions& o);
Report run_frame(const LocalRingPresentation& P, const DriverOptions& o);
Report run_slope(const LocalRingPresentation& P, const DriverOptions& o);
Report run_probe(const LocalRingPresentation& P, const DriverOptions& o);
Report run_corpus();

}  // namespace samuel

#endif
