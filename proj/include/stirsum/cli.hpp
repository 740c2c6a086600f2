#ifndef STIRSUM_CLI_HPP
#define STIRSUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace stirsum::cli {

/// Command-line front end. Results go to `out`, diagnostics to `err`.
/// Exit code contract: 0 success (verify: all suites pass), 1 runtime or
/// verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, for in-process callers; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirsum::cli

#endif
