#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace soclelab {

struct VerifyOptions {
  std::uint64_t seed = 20260814;
  int size = 1;  // multiplies the randomized sample counts
};

/// Runs one of the invariant suites ("relations", "gamma", "ds", "appendix") or "all",
/// writing a deterministic report. Returns true when every check passed.
bool verify_suite(const std::string& which, const VerifyOptions& opt, std::ostream& out);

}  // namespace soclelab
