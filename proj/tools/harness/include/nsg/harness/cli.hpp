#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsg::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitVerificationFailed = 3;
inline constexpr int kExitIo = 4;

/// Parses "3,5,7" (whitespace around entries allowed). Throws Error on junk.
std::vector<long long> parse_integer_list(const std::string& text);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsg::harness
