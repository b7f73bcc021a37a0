#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chtilde::cli {

enum class Command { compute, verify, certify, stats };
enum class Mode { raw, closed, both };
enum class Format { json, tsv, text };

struct RunConfig {
  Command command = Command::verify;
  int n = 3;
  int i = 0;
  int j = 0;
  Mode mode = Mode::raw;
  std::vector<std::string> suites;  // empty: every suite
  int trials = 200;
  std::uint64_t seed = 1;
  Format format = Format::text;
  std::optional<std::string> out;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs the selected command. Returns 0 on success, 1 when
/// an assertion or certificate fails, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_certify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace chtilde::cli
