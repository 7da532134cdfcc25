#ifndef BRB_CLI_HPP
#define BRB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace brb
{

/// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage,
/// parse or dimension error.
enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

/// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace brb

#endif
