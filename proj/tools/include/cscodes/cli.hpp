#pragma once

// Command-line dispatcher. `run` never writes to std::cout or std::cerr
// directly, so tests can capture both streams.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cscodes::cli {

enum class OutputFormat { Text, Json };

/// Exit codes: success, error (usage, I/O, numerical), precondition failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitPrecondition = 2;

/// Options shared by every subcommand, filled in by argument parsing.
struct RunConfig {
  std::string subcommand;
  std::vector<std::string> input_paths;
  std::optional<int> truncation;
  double tolerance = 1e-8;
  OutputFormat format = OutputFormat::Text;
  int workers = 1;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cscodes::cli
