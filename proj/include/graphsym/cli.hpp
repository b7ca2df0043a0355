#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphsym::cli {

/// Process exit codes.
enum ExitCode : int {
  ok = 0,
  corpus_failure = 1,
  usage = 2,
  resource = 3,
  precondition = 4,
  timeout = 5,
};

/// Runs the command line `args` (without the program name). Output that
/// would go to stdout is written to `out`, diagnostics to `err`; `in`
/// stands in for stdin when an input path is omitted.
int run(std::vector<std::string> const &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace graphsym::cli
