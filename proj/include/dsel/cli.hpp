#ifndef DSEL_CLI_HPP
#define DSEL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dsel::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kOk = 0, kInputError = 1, kInternalError = 2 };

/// Entry point behind the `dsel` executable. `args` excludes the program
/// name. Normal output goes to `out` (or the --output file), diagnostics to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsel::cli

#endif  // DSEL_CLI_HPP
