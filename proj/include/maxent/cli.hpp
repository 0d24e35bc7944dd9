#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace maxent::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kParametricInput = 3,
  kMagnitudeViolation = 4,
  kBenchRange = 5,
  kUsage = 64,
};

struct BenchOptions {
  int dmax = 6;
  int trials = 10;
  std::uint64_t seed = 1;
  int bits = 16;
};

struct BenchRow {
  int d = 0;
  double exact_ms = 0.0;
  double oracle_ms = 0.0;
  int agree = 0;
  int trials = 0;
};

/// Random d x d states for d = 2..dmax; exact verdict vs oracle agreement.
/// Throws DomainError when an option is out of range.
std::vector<BenchRow> run_bench(const BenchOptions& opts);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxent::cli
