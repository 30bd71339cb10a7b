#ifndef SYNLA_SELFTEST_HPP
#define SYNLA_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace synla {

struct SelftestResult {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failed == 0; }
};

/// Runs the condensed invariant suite of every module at desk scale
/// (dims 2-5, a few dozen seeded instances per law). Green selftest on a
/// clean build is the release gate.
SelftestResult run_selftest(std::uint64_t seed = 1);

}  // namespace synla

#endif  // SYNLA_SELFTEST_HPP
