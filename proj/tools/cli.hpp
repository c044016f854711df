#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hermzeta::cli {

enum class Command { kVerify, kTable, kCount, kEisenstein, kOracle };
enum class Format { kText, kCsv, kJson };

/// Parsed and validated command line.
struct RunConfig {
  Command command = Command::kVerify;
  std::vector<std::int64_t> discriminants;
  std::vector<unsigned> ks{1};
  std::vector<int> js{0, 1};
  std::vector<std::int64_t> deltas;
  std::vector<std::int64_t> ns;
  std::int64_t precision = 200;  // --N
  Format format = Format::kText;
  std::string out_path;          // empty: write to the given stream
  unsigned threads = 1;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Parses "a..b" (inclusive) or a single integer. Throws std::invalid_argument
/// on malformed input or an empty range.
std::vector<std::int64_t> parse_range(const std::string& token);

/// Rewrites "--opt v1 v2" as "--opt=v1 --opt=v2" so that values such as -3 or
/// -10..10 are never mistaken for options.
std::vector<std::string> normalize_arguments(const std::vector<std::string>& args);

/// Runs the tool on args (without the program name). Output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermzeta::cli
