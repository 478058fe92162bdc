#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumprod::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum ExitCode : int { kOk = 0, kFailure = 1, kStochasticFailure = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string name;  // subcommand
  std::string mode;  // second-level choice where the subcommand has one
  std::map<std::string, std::string> options;
  std::optional<std::string> output;  // write the artifact here instead of stdout
  std::string format;                 // "text", "json" or "csv"; empty means the default
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::string help;  // non-empty for --help requests

  bool has(const std::string& key) const { return options.count(key) > 0; }
  const std::string& get(const std::string& key) const;
};

/// argv without the program name. Throws UsageError for unknown
/// subcommands or flags and for missing required options.
Command parse(const std::vector<std::string>& args);

/// Runs the command, writing the artifact to `out` (or the output file) and
/// diagnostics to `err`. Returns 0 on success, 1 on domain or validation
/// errors, 2 on stochastic failure.
int execute(const Command& command, std::ostream& out, std::ostream& err);

/// parse + execute with usage errors reported on `err` (exit 1).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumprod::cli
