#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace monocurve::cli {

enum class Command { Info, Generators, Syzygies, Verify, Sweep };
enum class Format { Text, Json };

/// Inclusive integer range "lo..hi"; the upper end may be the literal "p"
/// (only meaningful for the b-range of a sweep).
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool hi_is_p = false;

  static Range parse(const std::string& text);
  std::int64_t upper(int p) const { return hi_is_p ? p : hi; }
};

struct RunConfig {
  Command command = Command::Info;
  std::int64_t m0 = 0;
  std::int64_t d = 0;
  int p = 0;
  Range p_range, a_range, b_range, d_range;
  int bound = 6;
  int samples = 1000;
  std::uint64_t seed = 20090101;
  bool syzygies = true;
  bool closure = true;
  unsigned threads = 0;  // 0: hardware concurrency
  Format format = Format::Text;
  std::optional<std::string> output;
};

/// Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monocurve::cli
