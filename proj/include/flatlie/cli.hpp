#ifndef FLATLIE_CLI_HPP
#define FLATLIE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace flatlie {

inline constexpr const char* tool_version = "0.1.0";

/// Executes one CLI invocation (args excludes the program name) against the
/// given streams and returns the process exit code: 0 all checks passed,
/// 1 some check failed, 2 usage or input errors. Filename "-" means the
/// provided input stream (stdin) or output stream (stdout).
int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err);

} // namespace flatlie

#endif
