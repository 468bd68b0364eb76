#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ksl/report.hpp"

namespace ksl::cli {

struct RunConfig {
  std::string subcommand;
  int n = 2;
  double q = 2.0;
  std::string q_grid;         // "start:stop:count" or "q1,q2,..."; overrides q
  std::string k = "auto";     // "auto" or a number
  double lambda1 = 1.0;
  double lambda = 0.4;        // pde-solve
  int L = 16;
  std::uint64_t seed = 7;
  std::string out = "ksl-out";
  std::string format = "json";
};

inline constexpr const char* kSubcommands[] = {
    "constants", "interval", "optimize-k", "algebra-verify", "sphere-verify", "pde-solve", "all"};

/// Parses a q-grid specification; throws std::invalid_argument when malformed.
std::vector<double> parse_q_grid(const std::string& spec);

/// Runs the configured subcommand without any I/O. Module errors propagate.
report::Report build_report(const RunConfig& cfg);

/// Exit codes: 0 every check passed, 1 a check failed or a module raised a
/// domain error, 2 the command line could not be parsed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ksl::cli
