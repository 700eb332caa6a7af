#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace scarf_cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kFailure = 3 };

struct RunConfig {
  std::string subcommand;
  int N = 0;
  int ell = 0;
  int d = 2;
  int channel = 0;
  int grid = 4000;
  int count = 3;
  int points = 200;
  double tol = 1e-5;
  std::string b;  // as typed; "p/q" only where the backend is exact
  std::vector<int> N_list;
  std::string which;
  std::string scheme = "factored";
  std::string measure = "dchi";
  std::string format;  // empty: subcommand default
  std::string output;  // empty: stdout
};

/// Parses argv. On --help or a usage error, writes to out/err and returns
/// the exit code; otherwise fills config and returns nullopt.
std::optional<int> parse(int argc, const char* const* argv, RunConfig& config, std::ostream& out, std::ostream& err);

/// Validates and dispatches one subcommand. Artifacts go to out unless
/// config.output is set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace scarf_cli
