#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wmc/solver_state.hpp"

namespace wmc::cli {

enum class ExitCode : int { Ok = 0, InputError = 1, Budget = 2, CheckFailed = 3 };

enum class OutputFormat { Text, KeyValue };

struct RunConfig {
  std::string subcommand;            // count | reduce | stats | oracle | amplitude
  std::string input = "-";           // path, or "-" for stdin
  std::string algorithm = "weighted";  // cdp | cdp2 | cdp3to2 | weighted
  SolverOptions solver;
  bool show_stats = false;
  bool check = false;
  OutputFormat format = OutputFormat::Text;
  std::uint32_t oracle_cap = 25;
  std::vector<std::uint32_t> parity_set;  // oracle --parity
  std::string boundary_in;
  std::string boundary_out;
};

/// Executes one subcommand. Results on `out`, diagnostics on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wmc::cli
