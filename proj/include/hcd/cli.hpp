#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcd::cli {

enum ExitCode : int {
  Ok = 0,
  Usage = 1,
  Parse = 2,
  Resource = 3,
  Precondition = 4,
};

/// Runs one command. `args` excludes the program name. Input files named "-" (or
/// omitted) are read from `in`. Reports go to `out`, human diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hcd::cli
