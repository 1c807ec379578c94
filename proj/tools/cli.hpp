#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kummerlab::cli {

inline constexpr const char* kVersion = "0.3.0";

/// Exit codes: 0 success, 2 usage or precondition failure, 3 internal
/// invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kummerlab::cli
