#pragma once

// Self-verification suites: each runs a family of invariant checks on one
// Cartan matrix and counts checks and failures.

#include "rank2km/structure_constants.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rank2km {

struct CheckResult {
  std::string suite;
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> samples;  // first few failures

  void record(bool ok, const std::string& what);
};

struct VerifyReport {
  std::string suite;
  std::int64_t window = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> skipped;  // suites not applicable to this matrix
  bool passed() const;
};

inline constexpr const char* kSuites[] = {"core", "sums", "subsystems", "signs",
                                          "oracle"};

// suite is one of kSuites or "all". "oracle" needs (a,b) = (4,1) and throws
// Unsupported otherwise; "all" skips it instead. Throws InvalidArgument for
// an unknown suite name or a negative window. signs must fit cd.
VerifyReport run_verify(const CartanData& cd, const std::string& suite,
                        std::int64_t window, const SignAssignment& signs);

}  // namespace rank2km
