#ifndef FROBCERT_SELFTEST_HPP
#define FROBCERT_SELFTEST_HPP

// Randomized property suites. Draws come from mt19937_64 reduced by modulo,
// so a seed fixes the case list on every platform.

#include <cstdint>
#include <string>
#include <vector>

namespace frobcert {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  /// FNV-1a over the case descriptions.
  std::uint64_t digest = 0;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<PropertyResult> results;

  bool ok() const;
};

constexpr std::uint64_t kDefaultSeed = 20240601;

SelftestReport run_selftest(std::uint64_t seed = kDefaultSeed, std::size_t cases = 1000);

std::string format_report(const SelftestReport& report);

}  // namespace frobcert

#endif  // FROBCERT_SELFTEST_HPP
