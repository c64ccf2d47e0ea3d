#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fps::cli {

/// Executes one command (args exclude the program name). Results go to
/// out, one-line diagnostics to err, series read from "-" come from in.
///
/// Exit codes: 0 success, 1 verification failed, 2 parse error,
/// 3 domain error, 4 internal assertion.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

} // namespace fps::cli
