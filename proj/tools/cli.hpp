#pragma once

#include <iosfwd>

namespace cliques::cli {

enum ExitCode : int {
  kOk = 0,
  kVerdictFalse = 1,
  kUsage = 2,
  kParse = 3,
  kUnknownName = 4,
  kGuard = 5,
  kAdmissibility = 6,
  kOther = 7,
};

/// Runs one command line. Report verbs write `#` header lines to `out`; verbs whose
/// stdout is data (JSON, CSV, counts) write their header to `err` instead.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cliques::cli
