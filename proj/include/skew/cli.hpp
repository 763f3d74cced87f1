#ifndef SKEW_CLI_HPP
#define SKEW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace skew::cli {

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;
inline constexpr int kParseError = 3;
inline constexpr int kInfeasibleParams = 4;
inline constexpr int kUnresolved = 5;
inline constexpr int kVerificationFailed = 6;

/// Dispatches one subcommand. Streams are injectable for tests; the
/// real binary passes std::cin/cout/cerr. Identical arguments produce
/// byte-identical stdout (timings go to err only).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace skew::cli

#endif
