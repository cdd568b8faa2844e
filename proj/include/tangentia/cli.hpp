#pragma once

// Command dispatch shared by the executable and the tests. Parsing argv is
// the executable's job; run() only sees a RunConfig.

#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace tangentia {

enum class Command { MCover, Instantons, Integrality, Torsion, Classes, Census, CheckGw, Graphs, VerifyAll };
enum class Format { Text, Json, Csv };

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);
std::optional<Format> parse_format(const std::string& name);

struct RunConfig {
  Command command = Command::VerifyAll;
  // Unset means: TANGENTIA_FORMAT if present, else text.
  std::optional<Format> format;
  std::map<std::string, std::string> params;  // flag name without dashes -> value ("" for switches)
  bool special_cubic = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Executes the command, writing the report to out and diagnostics to err.
/// `env_format` is the value of TANGENTIA_FORMAT, if any.
int run(const RunConfig& config, std::ostream& out, std::ostream& err, const char* env_format = nullptr);

}  // namespace tangentia
