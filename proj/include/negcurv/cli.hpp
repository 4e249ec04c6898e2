#ifndef NEGCURV_CLI_HPP
#define NEGCURV_CLI_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "negcurv/heintze.hpp"

namespace negcurv {

// Exit codes: 0 = affirmative verdict (criterion holds, no witness, clean
// validation), 1 = negative verdict, 2 = input or numerical error.
enum ExitCode { kExitAffirmative = 0, kExitNegative = 1, kExitError = 2 };

struct RunConfig {
  std::string command;  // validate | check | curvature | scan | witness | submersion | catalog
  std::string algebra_path;
  std::string metric_path;      // optional; orthonormal metric when empty
  std::string projection_path;  // submersion command
  std::optional<Eigen::VectorXd> pole;
  std::optional<Eigen::VectorXd> partner;
  std::optional<Eigen::VectorXd> target_vector;  // submersion command
  int samples = 1000;
  std::uint64_t seed = 42;
  int jobs = 1;
  std::map<std::string, double> tolerance_overrides;
  std::string output = "-";  // "-" writes to the stream passed to run()
};

/// Executes one pipeline, writes a single report to config.output, and maps
/// the outcome onto the exit-code contract. Errors are reported on `err` and
/// exit with kExitError.
int run(const RunConfig& config, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace negcurv

#endif
