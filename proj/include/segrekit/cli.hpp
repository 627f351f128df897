#ifndef SEGREKIT_CLI_HPP
#define SEGREKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace segrekit {

/// Entry point of the segrec command-line tool, separated from main() so
/// tests can drive it in-process with captured streams.  `args` excludes
/// the program name.  Returns the process exit code: 0 success, 1 input
/// rejected (parse/validation/unsupported), 2 corpus expectation mismatch,
/// 3 command-line usage error.
int cli_main(const std::vector<std::string> &args, std::ostream &out,
             std::ostream &err);

} // namespace segrekit

#endif
