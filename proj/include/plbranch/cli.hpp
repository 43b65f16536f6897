#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plbranch {

/// Process exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
};

enum class OutputFormat { Text, Json };

/// Parsed command line, before any mathematics happens.
struct InputSpec {
  std::string command;
  std::optional<std::uint64_t> p;
  std::optional<std::int64_t> n;  // param mode
  std::string y_text;              // param mode
  std::optional<std::string> f_text;  // poly mode
  std::optional<std::vector<std::int64_t>> generators;
  std::optional<int> max_degree;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> primes;
  OutputFormat format = OutputFormat::Text;

  bool param_mode() const noexcept { return !f_text.has_value(); }
};

/// Splits "<n>; <y(t)>". Throws InputError on malformed text.
std::pair<std::int64_t, std::string> split_param(std::string_view text);
/// Parses "<lo>..<hi>".
std::pair<std::uint64_t, std::uint64_t> parse_prime_range(std::string_view text);

/// Runs one command line (argv[0] is the program name) and returns the exit
/// status: 0 when every applicable check passes, 1 when any fails, 2 on
/// input or validation errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plbranch
